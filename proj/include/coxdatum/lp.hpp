#pragma once

#include "coxdatum/linalg.hpp"

namespace coxdatum {

enum class Feasibility { Feasible, Infeasible, Undetermined };

/// Outcome of deciding {x >= 0 : M x = b}. Exactly one of the two
/// certificates is filled:
///   Feasible   -> solution x with x >= 0 and M x = b
///   Infeasible -> farkas y with y^T M >= 0 and y^T b < 0
struct FeasibilityResult {
  Feasibility status = Feasibility::Undetermined;
  Vec solution;
  Vec farkas;
};

/// Phase-one simplex with Bland's rule. Exact mode never cycles and never
/// returns Undetermined; float mode reports Undetermined when the optimum
/// sits inside the epsilon band.
FeasibilityResult solve_feasibility(const Matrix& m, const Vec& b, const Field& field);

}  // namespace coxdatum
