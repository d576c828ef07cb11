#include "coxdatum/action.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "coxdatum/errors.hpp"

namespace coxdatum {

GroupWord parse_word(const CoxeterDatum& d, std::string_view text) {
  GroupWord w;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) w.letters.push_back(d.index_of(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\n') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  flush();
  return w;
}

GroupWord word_from_labels(const CoxeterDatum& d, const std::vector<std::string>& labels) {
  GroupWord w;
  for (const auto& l : labels) w.letters.push_back(d.index_of(l));
  return w;
}

std::vector<std::string> word_labels(const CoxeterDatum& d, const GroupWord& w) {
  std::vector<std::string> out;
  for (auto s : w.letters) out.push_back(d.label(s));
  return out;
}

GroupWord inverse(const GroupWord& w) {
  return {std::vector<std::size_t>(w.letters.rbegin(), w.letters.rend())};
}

GroupWord concat(const GroupWord& a, const GroupWord& b) {
  GroupWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

Vec simple_root(const CoxeterDatum& d, std::size_t s) { return unit_vector(d.rank(), s, d.field()); }

namespace {

void check_letter(const CoxeterDatum& d, std::size_t s) {
  if (s >= d.rank()) throw Error(ErrorKind::UnknownGenerator, "generator index out of range");
}

// Row s of the reflection matrix: (r_s v)_s = sum_u row[u] v_u.
Vec reflection_row(const CoxeterDatum& d, std::size_t s, Side side) {
  const Field& field = d.field();
  const Scalar two = field.from_int(2);
  Vec row(d.rank(), field.zero());
  for (std::size_t u = 0; u < d.rank(); ++u) {
    const Scalar& a = side == Side::One ? d.pairing(u, s) : d.pairing(s, u);
    row[u] = -(two * a);
  }
  row[s] += field.one();
  return row;
}

}  // namespace

ActionMatrix reflection_matrix(const CoxeterDatum& d, std::size_t s, Side side) {
  check_letter(d, s);
  Matrix m = Matrix::identity(d.rank(), d.field());
  const Vec row = reflection_row(d, s, side);
  for (std::size_t u = 0; u < d.rank(); ++u) m(s, u) = row[u];
  return {side, std::move(m), GroupWord{{s}}};
}

Vec apply_reflection(const CoxeterDatum& d, std::size_t s, Side side, Vec v) {
  check_letter(d, s);
  if (v.size() != d.rank()) throw Error(ErrorKind::Precondition, "vector length differs from rank");
  const Scalar two = d.field().from_int(2);
  Scalar acc = d.field().zero();
  for (std::size_t u = 0; u < d.rank(); ++u) {
    if (d.field().is_zero(v[u])) continue;
    const Scalar& a = side == Side::One ? d.pairing(u, s) : d.pairing(s, u);
    acc += v[u] * a;
  }
  v[s] -= two * acc;
  return v;
}

Vec apply_word(const CoxeterDatum& d, const GroupWord& w, Side side, Vec v) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) v = apply_reflection(d, *it, side, std::move(v));
  return v;
}

ActionMatrix word_matrix(const CoxeterDatum& d, const GroupWord& w, Side side) {
  // Build column by column: column u is w applied to e_u.
  const std::size_t n = d.rank();
  Matrix m(n, n, d.field().zero());
  for (std::size_t u = 0; u < n; ++u) {
    const Vec col = apply_word(d, w, side, simple_root(d, u));
    for (std::size_t i = 0; i < n; ++i) m(i, u) = col[i];
  }
  return {side, std::move(m), w};
}

Scalar pairing(const CoxeterDatum& d, const Vec& lambda, const Vec& mu) {
  if (lambda.size() != d.rank() || mu.size() != d.rank()) {
    throw Error(ErrorKind::Precondition, "vector length differs from rank");
  }
  Scalar acc = d.field().zero();
  for (std::size_t s = 0; s < d.rank(); ++s) {
    if (d.field().is_zero(lambda[s])) continue;
    for (std::size_t t = 0; t < d.rank(); ++t) acc += lambda[s] * d.pairing(s, t) * mu[t];
  }
  return acc;
}

Scalar pairing(const CoxeterDatum& d, const FreeCoeffVector& lambda, const FreeCoeffVector& mu) {
  if (lambda.side != Side::One || mu.side != Side::Two) {
    throw Error(ErrorKind::Precondition, "pairing expects a Side1 vector and a Side2 vector");
  }
  return pairing(d, lambda.coeffs, mu.coeffs);
}

ReducedWord reduce_word(const CoxeterDatum& d, const GroupWord& w) {
  const Field& field = d.field();
  const std::size_t n = d.rank();
  Matrix m = word_matrix(d, w, Side::One).m;
  std::vector<std::size_t> recorded;

  for (;;) {
    std::size_t descent = n;
    for (std::size_t s = 0; s < n && descent == n; ++s) {
      const VectorSign sign = classify(m.column(s), field);
      if (sign == VectorSign::Mixed) {
        throw Error(ErrorKind::MixedSignVector,
                    "w alpha_" + d.label(s) + " has coefficients of both signs");
      }
      if (sign == VectorSign::Zero) throw Error(ErrorKind::DescentInconsistency, "w alpha_s vanished");
      if (sign == VectorSign::Negative) descent = s;
    }
    if (descent == n) break;
    if (recorded.size() > w.size()) {
      throw Error(ErrorKind::DescentInconsistency, "descent did not shorten the word");
    }
    // m <- m * R_s; only the columns u with a nonzero entry in row s of R_s move.
    const Vec row = reflection_row(d, descent, Side::One);
    const Vec col = m.column(descent);
    for (std::size_t u = 0; u < n; ++u) {
      Scalar coef = row[u];
      if (u == descent) coef -= field.one();
      if (field.is_zero(coef)) continue;
      for (std::size_t i = 0; i < n; ++i) m(i, u) += coef * col[i];
    }
    recorded.push_back(descent);
  }
  if (!is_identity(m, field)) {
    throw Error(ErrorKind::DescentInconsistency, "no descent left but the action is not the identity");
  }
  ReducedWord out;
  out.word.letters.assign(recorded.rbegin(), recorded.rend());
  out.length = recorded.size();
  return out;
}

InversionSet inversion_set(const CoxeterDatum& d, const GroupWord& w, Side side) {
  InversionSet out;
  out.side = side;
  std::set<RayId> seen;
  const std::size_t l = w.size();
  // k-th element: r_{s_l} ... r_{s_{k+1}} applied to the simple root s_k.
  for (std::size_t k = l; k-- > 0;) {
    Vec v = simple_root(d, w.letters[k]);
    GroupWord tail{std::vector<std::size_t>(w.letters.begin() + static_cast<std::ptrdiff_t>(k) + 1, w.letters.end())};
    v = apply_word(d, inverse(tail), side, std::move(v));
    if (classify(v, d.field()) != VectorSign::Positive) {
      throw Error(ErrorKind::DuplicateRay, "inversion root is not positive; the word is not reduced");
    }
    RayId ray(v, d.field());
    if (!seen.insert(ray).second) {
      throw Error(ErrorKind::DuplicateRay, "repeated inversion ray; the word is not reduced");
    }
    out.roots.push_back(std::move(v));
    out.rays.push_back(std::move(ray));
  }
  return out;
}

namespace {

mpq_class binomial(long n, long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(r);
}

mpq_class power(const mpq_class& base, long e) {
  mpq_class r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

FreeCoeffVector dihedral_orbit_closed_form(const CoxeterDatum& d, std::size_t s, std::size_t t, long n,
                                           Side side) {
  check_letter(d, s);
  check_letter(d, t);
  if (s == t) throw Error(ErrorKind::Precondition, "dihedral closed form needs s != t");
  if (n < 0) throw Error(ErrorKind::Precondition, "n must be nonnegative");
  const Field& field = d.field();
  // Coefficient of the t-th simple root picks up A[s][t] on Side1 and A[t][s] on Side2.
  const Scalar& a = side == Side::One ? d.pairing(s, t) : d.pairing(t, s);
  const Scalar p = d.pairing(s, t) * d.pairing(t, s);

  Scalar e_coef;
  Scalar f_coef;
  if (field.mode() == Mode::Exact) {
    const mpq_class& q = p.rational();
    mpq_class e = 0;
    for (long j = 0; j <= n; ++j) {
      mpq_class term = binomial(2 * n - j, j) * power(4 * q, n - j);
      e += (j % 2 == 0) ? term : mpq_class(-term);
    }
    mpq_class f = 0;
    for (long j = 0; j + 1 <= n; ++j) {
      mpq_class term = binomial(2 * n - 1 - j, j) * power(mpq_class(4) * q, n - 1 - j) * 2;
      f += (j % 2 == 0) ? term : mpq_class(-term);
    }
    e_coef = Scalar(e);
    f_coef = Scalar(f);
  } else {
    const double pd = p.to_double();
    const double nn = static_cast<double>(n);
    double e = 0.0;
    double f = 0.0;
    if (field.is_zero(p)) {
      e = (n % 2 == 0) ? 1.0 : -1.0;
    } else if (std::fabs(pd - 1.0) <= field.epsilon()) {
      e = 2.0 * nn + 1.0;
      f = 2.0 * nn;
    } else if (pd > 1.0) {
      const double theta = std::acosh(std::sqrt(pd));
      e = std::sinh((2.0 * nn + 1.0) * theta) / std::sinh(theta);
      f = std::sinh(2.0 * nn * theta) / (std::sinh(theta) * std::cosh(theta));
    } else {
      const Bond m = d.is_validated() ? d.bond(s, t) : 0;
      const double theta = m >= 2 ? std::numbers::pi / static_cast<double>(m) : std::acos(std::sqrt(pd));
      e = std::sin((2.0 * nn + 1.0) * theta) / std::sin(theta);
      f = std::sin(2.0 * nn * theta) / (std::sin(theta) * std::cos(theta));
    }
    e_coef = Scalar(e);
    f_coef = Scalar(f);
  }

  FreeCoeffVector out{side, Vec(d.rank(), field.zero())};
  out.coeffs[s] = e_coef;
  out.coeffs[t] = -(a * f_coef);
  return out;
}

GroupWord dihedral_longest_word(const CoxeterDatum& d, std::size_t r, std::size_t s) {
  check_letter(d, r);
  check_letter(d, s);
  if (r == s) throw Error(ErrorKind::Precondition, "dihedral longest word needs two distinct generators");
  const Bond m = d.bond(r, s);
  if (is_infinite(m)) throw Error(ErrorKind::InfiniteBond, "m_" + d.label(r) + d.label(s) + " is infinite");
  GroupWord w;
  for (Bond i = 0; i < m; ++i) w.letters.push_back(i % 2 == 0 ? r : s);
  return w;
}

std::optional<long> product_order(const CoxeterDatum& d, std::size_t s, std::size_t t, Side side, long cap) {
  if (s == t) throw Error(ErrorKind::Precondition, "product order needs s != t");
  if (cap < 1) throw Error(ErrorKind::Precondition, "cap must be at least 1");
  const Matrix step = word_matrix(d, GroupWord{{s, t}}, side).m;
  Matrix acc = step;
  for (long k = 1; k <= cap; ++k) {
    if (is_identity(acc, d.field())) return k;
    acc = acc * step;
  }
  return std::nullopt;
}

}  // namespace coxdatum
