#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxdatum/linalg.hpp"
#include "coxdatum/vectors.hpp"

namespace coxdatum {

/// Coxeter parameter m_st; kInfiniteBond stands for m = infinity.
using Bond = int;
inline constexpr Bond kInfiniteBond = 0;
inline bool is_infinite(Bond m) { return m == kInfiniteBond; }

using CoxeterMatrix = std::vector<std::vector<Bond>>;

/// Optional concrete spaces V1, V2 the free datum pushes forward into.
struct ConcreteRealization {
  Matrix p1;  // dim1 x n, column s is alpha_s
  Matrix p2;  // dim2 x n, column s is beta_s
  Matrix form;  // dim1 x dim2, the bilinear pairing
  bool spans_both = false;  // filled in by validate()
};

/// Pairing matrix A[s][t] = <alpha_s, beta_t> over an ordered generator list,
/// plus the derived Coxeter matrix once validated.
class CoxeterDatum {
 public:
  CoxeterDatum(std::vector<std::string> generators, Matrix pairing, Field field,
               std::optional<ConcreteRealization> realization = std::nullopt);

  std::size_t rank() const { return generators_.size(); }
  const std::vector<std::string>& generators() const { return generators_; }
  const Matrix& pairing() const { return pairing_; }
  const Scalar& pairing(std::size_t s, std::size_t t) const { return pairing_(s, t); }
  const Field& field() const { return field_; }
  const std::optional<ConcreteRealization>& realization() const { return realization_; }

  bool is_validated() const { return coxeter_.has_value(); }
  /// Throws InvalidDatum when validate() has not accepted this datum.
  const CoxeterMatrix& coxeter() const;
  Bond bond(std::size_t s, std::size_t t) const { return coxeter()[s][t]; }

  std::size_t index_of(std::string_view label) const;
  const std::string& label(std::size_t s) const { return generators_.at(s); }

 private:
  friend CoxeterDatum validated(CoxeterDatum datum);

  std::vector<std::string> generators_;
  Matrix pairing_;
  Field field_;
  std::optional<ConcreteRealization> realization_;
  std::optional<CoxeterMatrix> coxeter_;
};

/// One failed check. Indices are -1 when not applicable.
struct Violation {
  std::string condition;  // "C1".."C6", "consistency", "shape"
  int s = -1;
  int t = -1;
  std::string message;
  bool warning = false;
};

enum class C5Verdict { Certified, Violated, Undetermined };

/// Decides 0 in PLC(vectors). Certified carries f with f(v) > 0 for every v;
/// Violated carries lambda >= 0, lambda != 0 with sum lambda_i v_i = 0.
struct C5Result {
  C5Verdict verdict = C5Verdict::Undetermined;
  Vec functional;
  Vec combination;
};

struct ValidationReport {
  bool valid = false;
  std::vector<Violation> violations;  // includes warnings
  CoxeterMatrix coxeter;
  std::optional<C5Result> c5_side1;
  std::optional<C5Result> c5_side2;
  bool spans_both = true;

  bool has_errors() const;
};

struct CoxeterDerivation {
  CoxeterMatrix coxeter;
  std::vector<Violation> errors;
};

/// Derive m from the pairwise products A[s][t]*A[t][s]. Exact mode recognizes
/// the rational values of cos^2(pi/m) only (m in {2,3,4,6}).
CoxeterDerivation derive_coxeter_matrix(const Matrix& pairing, const Field& field);

/// vectors are the columns of `columns`.
C5Result check_c5(const Matrix& columns, const Field& field);

ValidationReport validate(const CoxeterDatum& datum);

/// Validate and return a copy that carries its Coxeter matrix; throws
/// InvalidDatum listing the first violation otherwise.
CoxeterDatum validated(CoxeterDatum datum);

/// Sub-datum on the generators in `labels`, kept in the parent's order.
CoxeterDatum restrict(const CoxeterDatum& datum, const std::vector<std::string>& labels);

/// Gram matrix of the standard geometric realization: unit diagonal,
/// C[s][t] = -sqrt(A[s][t] A[t][s]).
Matrix classical_form(const CoxeterDatum& datum);

/// The datum (S, V, V, Pi, Pi, C) of the standard realization, in the same
/// field as `datum` (exact when every product is a rational square).
CoxeterDatum classical_datum(const CoxeterDatum& datum);

/// "paper-triangle", "dihedral-<m>", "infinite-gamma-<g>" (also accepted:
/// "infinite-gamma(<g>)" and "infinite-gamma(γ=<g>)").
CoxeterDatum builtin_example(std::string_view name);
std::vector<std::string> builtin_example_names();

}  // namespace coxdatum
