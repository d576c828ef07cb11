#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "coxdatum/roots.hpp"

namespace coxdatum {

/// A linear functional given by its values on the simple roots of one side.
struct Functional {
  Side side = Side::One;
  Vec values;
};

/// Checks that the values come from a linear functional on the concrete
/// space when the datum carries a realization.
Functional make_functional(const CoxeterDatum& d, Side side, Vec values);

/// (r_s f)(x) = f(r_s x).
Functional reflect_functional(const CoxeterDatum& d, const Functional& f, std::size_t s);
/// w.f; the rightmost letter acts first.
Functional apply_word(const CoxeterDatum& d, const GroupWord& w, const Functional& f);

Scalar evaluate(const Functional& f, const Vec& coeffs);

enum class ConeStatus { InTitsCone, InPSharp, InDualCone, NotDeterminedUpTo, RejectedWitness };

std::string_view to_string(ConeStatus status);

struct TraceStep {
  std::size_t generator = 0;
  Vec values;  // functional values or coefficients after the step
};

/// InTitsCone: witness . f has no negative value on the simple roots.
/// RejectedWitness: witness . v has a negative coefficient.
struct ConeVerdict {
  ConeStatus status = ConeStatus::NotDeterminedUpTo;
  GroupWord witness;
  long budget = 0;
  std::vector<TraceStep> trace;
  bool ambiguous = false;
};

ConeVerdict tits_membership(const CoxeterDatum& d, const Functional& f, long max_steps);

/// Rays of table roots where f is negative; a lower bound for Neg(f).
std::vector<RayId> neg_set(const CoxeterDatum& d, const Functional& f, const RootTable& table);

/// Sweeps group elements of length <= max_len. InDualCone when the sweep
/// exhausts a finite group, NotDeterminedUpTo(max_len) otherwise.
ConeVerdict dual_membership(const CoxeterDatum& d, const Vec& v, Side side, long max_len,
                            std::size_t element_cap = 200000);

struct PlanarCone {
  Side side = Side::One;
  /// Extreme rays in the coordinates of the pair; empty means the zero cone.
  std::vector<Vec> rays;
};

struct Rank2DualCones {
  std::size_t r = 0;
  std::size_t s = 1;
  CoxeterDatum pair;
  PlanarCone side1;
  PlanarCone side2;
};

/// Exact intersection of the 2m images wP for the dihedral subgroup on {r, s}.
Rank2DualCones dual_cone_rank2(const CoxeterDatum& d, std::size_t r, std::size_t s);

/// True when x lies in the closed planar cone spanned by the given rays.
bool in_planar_cone(const std::vector<Vec>& rays, const Vec& x, const Field& field);

/// Extreme rays of the intersection of pointed planar cones, each given by
/// two independent spanning rays.
std::vector<Vec> intersect_planar_cones(const std::vector<std::vector<Vec>>& cones, const Field& field);

struct NonpositivityResult {
  Scalar value;
  bool holds = true;
  bool definitive = false;
};

/// Throws Uncertified unless both verdicts are InDualCone or bounded.
NonpositivityResult check_nonpositivity(const CoxeterDatum& d, const Vec& v1, const Vec& v2, const ConeVerdict& cert1,
                                        const ConeVerdict& cert2);

struct RefutationStep {
  std::size_t generator = 0;
  Vec x;  // Side2 iterate
  Vec z;  // Side1 iterate
  bool z_moved = false;
};

struct Refutation {
  ConeStatus status = ConeStatus::RejectedWitness;
  Side rejected = Side::Two;
  GroupWord witness;
  Scalar epsilon;
  long bound = 0;
  std::vector<RefutationStep> steps;
};

/// Descent that expels v2 (or v1) from its dual cone when <v1, v2> > 0.
/// f1, f2 default to the all-ones functionals and must be >= 1 on the joint
/// support.
Refutation refute_positive_pairing(const CoxeterDatum& d, const Vec& v1, const Vec& v2,
                                   std::optional<Functional> f1 = std::nullopt,
                                   std::optional<Functional> f2 = std::nullopt, long cap = 100000);

}  // namespace coxdatum
