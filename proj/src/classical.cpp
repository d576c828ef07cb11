#include "coxdatum/classical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coxdatum/errors.hpp"

namespace coxdatum {

ClassicalRealization::ClassicalRealization(const CoxeterDatum& d) : classical_(classical_datum(d)) {}

Scalar ClassicalRealization::form(const Vec& x, const Vec& y) const { return pairing(classical_, x, y); }

ClassicalRoot classical_root(const ClassicalRealization& cl, const Witness& witness) {
  const CoxeterDatum& c = cl.datum();
  return {apply_word(c, witness.word, Side::One, simple_root(c, witness.simple)), witness};
}

ClassicalRoot classical_root(const CoxeterDatum& d, const Witness& witness) {
  return classical_root(ClassicalRealization(d), witness);
}

bool CoefficientRow::ok() const {
  return inequality && sign_classical && sign_paired && at_least_one && brink && one_iff_one &&
         quantized.value_or(true);
}

bool PairingRow::ok() const { return inequality && sign_symmetric && sign_classical.value_or(true); }

std::size_t ComparisonReport::violations() const {
  std::size_t n = support_match ? 0 : 1;
  for (const auto& r : coefficients) n += r.ok() ? 0 : 1;
  for (const auto& r : pairings) n += r.ok() ? 0 : 1;
  return n;
}

std::vector<Scalar> quantization_candidates(const CoxeterDatum& d) {
  const Field& field = d.field();
  std::vector<Scalar> out{field.one()};
  std::vector<Bond> bonds;
  for (std::size_t s = 0; s < d.rank(); ++s)
    for (std::size_t t = s + 1; t < d.rank(); ++t) {
      const Bond m = d.bond(s, t);
      if (!is_infinite(m) && m >= 4 && std::find(bonds.begin(), bonds.end(), m) == bonds.end()) bonds.push_back(m);
    }
  std::sort(bonds.begin(), bonds.end());
  for (Bond m : bonds) {
    if (field.mode() == Mode::Exact) {
      if (m == 4) out.push_back(field.from_int(2));
      if (m == 6) out.push_back(field.from_int(3));
    } else {
      const double c = std::cos(std::numbers::pi / m);
      out.push_back(field.from_double(4.0 * c * c));
    }
  }
  return out;
}

ComparisonReport compare_coefficients(const CoxeterDatum& d, const ClassicalRealization& cl, const Root& root,
                                      std::size_t root_index) {
  if (root.side != Side::One) throw Error(ErrorKind::Precondition, "coefficient comparison takes Side1 roots");
  const Field& field = d.field();
  const Vec image = phi(d, root).coeffs;
  const Vec classical = classical_root(cl, root.witness).coeffs;
  const std::vector<Scalar> candidates = quantization_candidates(d);
  const bool positive = classify(root.coeffs, field) == VectorSign::Positive;
  const Scalar one = field.one();
  const Scalar four = field.from_int(4);

  ComparisonReport report;
  for (std::size_t r = 0; r < d.rank(); ++r) {
    CoefficientRow row;
    row.root_index = root_index;
    row.generator = r;
    row.x = root.coeffs[r];
    row.x_prime = image[r];
    row.x_classical = classical[r];
    row.product = row.x * row.x_prime;
    row.slack = row.product - row.x_classical * row.x_classical;
    row.inequality = field.sign(row.slack) >= 0;
    row.sign_classical = field.sign(row.x) == field.sign(row.x_classical);
    row.sign_paired = field.sign(row.x) == field.sign(row.x_prime);
    row.at_least_one = field.sign(row.x) <= 0 || !field.less(row.product, one);
    row.brink = field.sign(row.x_classical) <= 0 || !field.less(row.x_classical, one);
    if (positive) row.one_iff_one = field.equal(row.product, one) == field.equal(row.x_classical, one);
    if (!field.less(row.product, one) && field.less(row.product, four)) {
      bool hit = false;
      std::optional<Scalar> best;
      for (const Scalar& c : candidates) {
        if (field.equal(c, row.product)) hit = true;
        if (!best || std::fabs((c - row.product).to_double()) < std::fabs((*best - row.product).to_double())) best = c;
      }
      row.quantized = hit;
      row.nearest_candidate = best;
    }
    report.coefficients.push_back(std::move(row));
  }
  report.support_match = support(root.coeffs, field) == support(image, field);
  return report;
}

ComparisonReport compare_coefficients(const CoxeterDatum& d, const Root& root) {
  return compare_coefficients(d, ClassicalRealization(d), root);
}

PairingRow compare_pairings(const CoxeterDatum& d, const ClassicalRealization& cl, const Root& first,
                            const Root& second) {
  if (first.side != Side::One || second.side != Side::One) {
    throw Error(ErrorKind::Precondition, "pairing comparison takes Side1 roots");
  }
  const Field& field = d.field();
  PairingRow row;
  const Vec phi1 = phi(d, first).coeffs;
  const Vec phi2 = phi(d, second).coeffs;
  row.left_12 = pairing(d, first.coeffs, phi2);
  row.left_21 = pairing(d, second.coeffs, phi1);
  row.lhs = row.left_12 * row.left_21;
  const Scalar f = cl.form(classical_root(cl, first.witness).coeffs, classical_root(cl, second.witness).coeffs);
  row.rhs = f * f;
  row.inequality = !field.less(row.lhs, row.rhs);
  row.equality = field.equal(row.lhs, row.rhs);
  row.sign_symmetric = field.sign(row.left_12) == field.sign(row.left_21);
  const std::ptrdiff_t s = single_support(second.coeffs, field);
  if (s >= 0 && field.equal(second.coeffs[static_cast<std::size_t>(s)], field.one())) {
    const auto su = static_cast<std::size_t>(s);
    const Scalar classical = cl.form(classical_root(cl, first.witness).coeffs, simple_root(cl.datum(), su));
    const Scalar paired = pairing(d, first.coeffs, simple_root(d, su));
    row.sign_classical = field.sign(classical) == field.sign(paired);
  }
  return row;
}

PairingRow compare_pairings(const CoxeterDatum& d, const Root& first, const Root& second) {
  return compare_pairings(d, ClassicalRealization(d), first, second);
}

ComparisonReport compare_table(const CoxeterDatum& d, const RootTable& table, bool include_pairs) {
  const ClassicalRealization cl(d);
  ComparisonReport report;
  for (std::size_t i = 0; i < table.roots.size(); ++i) {
    ComparisonReport one = compare_coefficients(d, cl, table.roots[i], i);
    report.support_match = report.support_match && one.support_match;
    for (auto& row : one.coefficients) report.coefficients.push_back(std::move(row));
  }
  if (include_pairs) {
    for (std::size_t i = 0; i < table.roots.size(); ++i)
      for (std::size_t j = 0; j < table.roots.size(); ++j) {
        PairingRow row = compare_pairings(d, cl, table.roots[i], table.roots[j]);
        row.first = i;
        row.second = j;
        report.pairings.push_back(std::move(row));
      }
  }
  return report;
}

}  // namespace coxdatum
