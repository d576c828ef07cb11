#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coxdatum/datum.hpp"
#include "coxdatum/vectors.hpp"

namespace coxdatum {

/// A word r_{s_1} ... r_{s_k} stored as generator indices, left to right.
struct GroupWord {
  std::vector<std::size_t> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  friend auto operator<=>(const GroupWord&, const GroupWord&) = default;
};

/// Parse "r,s,t" (commas or whitespace) against the datum's labels.
GroupWord parse_word(const CoxeterDatum& d, std::string_view text);
GroupWord word_from_labels(const CoxeterDatum& d, const std::vector<std::string>& labels);
std::vector<std::string> word_labels(const CoxeterDatum& d, const GroupWord& w);
GroupWord inverse(const GroupWord& w);
/// a followed by b, i.e. the product ab.
GroupWord concat(const GroupWord& a, const GroupWord& b);

struct ActionMatrix {
  Side side = Side::One;
  Matrix m;
  GroupWord word;
};

Vec simple_root(const CoxeterDatum& d, std::size_t s);

ActionMatrix reflection_matrix(const CoxeterDatum& d, std::size_t s, Side side);

/// r_s applied to a coefficient vector without forming the matrix.
Vec apply_reflection(const CoxeterDatum& d, std::size_t s, Side side, Vec v);

/// w.v; the rightmost letter acts first.
Vec apply_word(const CoxeterDatum& d, const GroupWord& w, Side side, Vec v);

ActionMatrix word_matrix(const CoxeterDatum& d, const GroupWord& w, Side side);

/// lambda^T A mu for a Side1 vector lambda and a Side2 vector mu.
Scalar pairing(const CoxeterDatum& d, const FreeCoeffVector& lambda, const FreeCoeffVector& mu);
Scalar pairing(const CoxeterDatum& d, const Vec& lambda, const Vec& mu);

struct ReducedWord {
  GroupWord word;
  std::size_t length = 0;
};

/// Lex-minimal descent normal form. Throws MixedSignVector or
/// DescentInconsistency when the datum breaks the sign dichotomy.
ReducedWord reduce_word(const CoxeterDatum& d, const GroupWord& w);

struct InversionSet {
  Side side = Side::One;
  std::vector<Vec> roots;  // positive representatives, in formula order
  std::vector<RayId> rays;
};

/// N_i(w) for a reduced word; throws DuplicateRay when w is not reduced.
InversionSet inversion_set(const CoxeterDatum& d, const GroupWord& w, Side side);

/// (r_s r_t)^n applied to the simple root s on the given side, from the
/// closed form. Exact data are evaluated as polynomials in
/// p = A[s][t] A[t][s]; float data use the trigonometric or hyperbolic form.
FreeCoeffVector dihedral_orbit_closed_form(const CoxeterDatum& d, std::size_t s, std::size_t t, long n,
                                           Side side);

/// Alternating word r, s, r, ... of length m_rs.
GroupWord dihedral_longest_word(const CoxeterDatum& d, std::size_t r, std::size_t s);

/// Order of r_s r_t on the given side, or nullopt when it exceeds cap.
std::optional<long> product_order(const CoxeterDatum& d, std::size_t s, std::size_t t, Side side, long cap);

}  // namespace coxdatum
