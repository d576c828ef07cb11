#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coxdatum/roots.hpp"

namespace coxdatum {

/// The standard geometric realization: the datum with pairing C, acting on
/// the basis gamma_s.
class ClassicalRealization {
 public:
  explicit ClassicalRealization(const CoxeterDatum& d);

  const CoxeterDatum& datum() const { return classical_; }
  const Matrix& gram() const { return classical_.pairing(); }
  /// (x, y) under the Gram matrix.
  Scalar form(const Vec& x, const Vec& y) const;

 private:
  CoxeterDatum classical_;
};

struct ClassicalRoot {
  Vec coeffs;
  Witness witness;
};

/// w gamma_s; from a Side1 witness this is phi_1, from a Side2 witness phi_2.
ClassicalRoot classical_root(const ClassicalRealization& cl, const Witness& witness);
ClassicalRoot classical_root(const CoxeterDatum& d, const Witness& witness);

/// One generator r of one root: x = coeff_r(alpha), x' = coeff_r(phi(alpha)),
/// x'' = coeff_r(phi_1(alpha)).
struct CoefficientRow {
  std::size_t root_index = 0;
  std::size_t generator = 0;
  Scalar x, x_prime, x_classical;
  Scalar product;  // x * x'
  Scalar slack;    // x * x' - x''^2
  bool inequality = true;     // slack >= 0
  bool sign_classical = true; // sign x = sign x''
  bool sign_paired = true;    // sign x = sign x'
  bool at_least_one = true;   // x > 0 implies x * x' >= 1
  bool brink = true;          // x'' > 0 implies x'' >= 1
  bool one_iff_one = true;    // x * x' = 1 iff x'' = 1, for positive roots
  /// Only filled when 1 <= x * x' < 4.
  std::optional<bool> quantized;
  std::optional<Scalar> nearest_candidate;

  bool ok() const;
};

struct PairingRow {
  std::size_t first = 0;
  std::size_t second = 0;
  Scalar left_12;  // <alpha_1, phi(alpha_2)>
  Scalar left_21;  // <alpha_2, phi(alpha_1)>
  Scalar lhs;      // left_12 * left_21
  Scalar rhs;      // (phi_1 alpha_1, phi_1 alpha_2)^2
  bool inequality = true;
  bool equality = false;
  bool sign_symmetric = true;
  /// Set when the second root is simple: sign (phi_1 alpha_1, gamma_s) = sign <alpha_1, beta_s>.
  std::optional<bool> sign_classical;

  bool ok() const;
};

struct ComparisonReport {
  std::vector<CoefficientRow> coefficients;
  std::vector<PairingRow> pairings;
  bool support_match = true;

  std::size_t violations() const;
  bool ok() const { return violations() == 0; }
};

/// The finite list {1} U {4 cos^2(pi/m) : m a finite bond >= 4 of the datum},
/// restricted to rational members in exact mode.
std::vector<Scalar> quantization_candidates(const CoxeterDatum& d);

ComparisonReport compare_coefficients(const CoxeterDatum& d, const ClassicalRealization& cl, const Root& root,
                                      std::size_t root_index = 0);
ComparisonReport compare_coefficients(const CoxeterDatum& d, const Root& root);

PairingRow compare_pairings(const CoxeterDatum& d, const ClassicalRealization& cl, const Root& first,
                            const Root& second);
PairingRow compare_pairings(const CoxeterDatum& d, const Root& first, const Root& second);

/// Every coefficient check over a Side1 table plus every ordered pair.
ComparisonReport compare_table(const CoxeterDatum& d, const RootTable& table, bool include_pairs = true);

}  // namespace coxdatum
