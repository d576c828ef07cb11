#include "coxdatum/cone.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "coxdatum/errors.hpp"

namespace coxdatum {

namespace {

void require_c6(const CoxeterDatum& d) {
  const auto& real = d.realization();
  if (!real) return;
  const Field& field = d.field();
  if (rank(real->p1, field) != real->p1.rows() || rank(real->p2, field) != real->p2.rows()) {
    throw Error(ErrorKind::SpanCondition, "cone operations need the simple roots to span both spaces");
  }
}

// Applies the reflection matrices on the right, so element.word . v = m * v.
struct Element {
  GroupWord word;
  Matrix m;
};

Matrix right_reflect(const CoxeterDatum& d, const Matrix& m, std::size_t s, Side side) {
  return m * reflection_matrix(d, s, side).m;
}

}  // namespace

Functional make_functional(const CoxeterDatum& d, Side side, Vec values) {
  if (values.size() != d.rank()) throw Error(ErrorKind::Precondition, "functional needs one value per generator");
  for (const Scalar& x : values) d.field().check(x);
  if (const auto& real = d.realization()) {
    const Matrix& p = side == Side::One ? real->p1 : real->p2;
    if (!in_row_space(p, values, d.field())) {
      throw Error(ErrorKind::Precondition, "values are not those of a linear functional on the concrete space");
    }
  }
  return {side, std::move(values)};
}

Functional reflect_functional(const CoxeterDatum& d, const Functional& f, std::size_t s) {
  if (s >= d.rank()) throw Error(ErrorKind::UnknownGenerator, "generator index out of range");
  const Scalar two = d.field().from_int(2);
  Functional out = f;
  const Scalar fs = f.values[s];
  if (d.field().is_zero(fs)) return out;
  for (std::size_t t = 0; t < d.rank(); ++t) {
    const Scalar& a = f.side == Side::One ? d.pairing(t, s) : d.pairing(s, t);
    out.values[t] -= two * a * fs;
  }
  return out;
}

Functional apply_word(const CoxeterDatum& d, const GroupWord& w, const Functional& f) {
  Functional out = f;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) out = reflect_functional(d, out, *it);
  return out;
}

Scalar evaluate(const Functional& f, const Vec& coeffs) { return dot(f.values, coeffs); }

std::string_view to_string(ConeStatus status) {
  switch (status) {
    case ConeStatus::InTitsCone: return "InTitsCone";
    case ConeStatus::InPSharp: return "InP_sharp";
    case ConeStatus::InDualCone: return "InDualCone";
    case ConeStatus::NotDeterminedUpTo: return "NotDeterminedUpTo";
    case ConeStatus::RejectedWitness: return "RejectedWitness";
  }
  return "NotDeterminedUpTo";
}

ConeVerdict tits_membership(const CoxeterDatum& d, const Functional& f, long max_steps) {
  require_c6(d);
  const Field& field = d.field();
  ConeVerdict verdict;
  verdict.budget = max_steps;
  Functional g = f;
  std::vector<std::size_t> applied;
  for (;;) {
    std::size_t pick = d.rank();
    for (std::size_t s = 0; s < d.rank(); ++s) {
      if (field.mode() == Mode::Float && field.is_zero(g.values[s]) && g.values[s].to_double() != 0.0) {
        verdict.ambiguous = true;
      }
      if (field.sign(g.values[s]) < 0) {
        pick = s;
        break;
      }
    }
    if (pick == d.rank()) {
      verdict.status = applied.empty() ? ConeStatus::InPSharp : ConeStatus::InTitsCone;
      verdict.witness.letters.assign(applied.rbegin(), applied.rend());
      return verdict;
    }
    if (static_cast<long>(applied.size()) >= max_steps) {
      verdict.status = ConeStatus::NotDeterminedUpTo;
      verdict.witness.letters.assign(applied.rbegin(), applied.rend());
      return verdict;
    }
    g = reflect_functional(d, g, pick);
    applied.push_back(pick);
    verdict.trace.push_back({pick, g.values});
  }
}

std::vector<RayId> neg_set(const CoxeterDatum& d, const Functional& f, const RootTable& table) {
  if (f.side != table.side) throw Error(ErrorKind::Precondition, "functional and table sides differ");
  std::set<RayId> rays;
  for (const Root& r : table.roots) {
    if (r.sign == VectorSign::Positive && d.field().sign(evaluate(f, r.coeffs)) < 0) rays.insert(r.ray);
  }
  return {rays.begin(), rays.end()};
}

ConeVerdict dual_membership(const CoxeterDatum& d, const Vec& v, Side side, long max_len, std::size_t element_cap) {
  require_c6(d);
  const Field& field = d.field();
  if (v.size() != d.rank()) throw Error(ErrorKind::Precondition, "vector length differs from rank");
  ConeVerdict verdict;
  verdict.budget = max_len;

  std::set<std::string> seen;
  std::vector<Element> frontier{{GroupWord{}, Matrix::identity(d.rank(), field)}};
  seen.insert(matrix_key(frontier.front().m, field));
  if (has_negative_entry(v, field)) {
    verdict.status = ConeStatus::RejectedWitness;
    return verdict;
  }
  for (long len = 1; len <= max_len; ++len) {
    std::vector<Element> next;
    for (const Element& e : frontier) {
      for (std::size_t s = 0; s < d.rank(); ++s) {
        Matrix m = right_reflect(d, e.m, s, side);
        if (!seen.insert(matrix_key(m, field)).second) continue;
        Element child{concat(e.word, GroupWord{{s}}), std::move(m)};
        if (has_negative_entry(child.m * v, field)) {
          verdict.status = ConeStatus::RejectedWitness;
          verdict.witness = std::move(child.word);
          return verdict;
        }
        next.push_back(std::move(child));
        if (seen.size() > element_cap) {
          verdict.status = ConeStatus::NotDeterminedUpTo;
          return verdict;
        }
      }
    }
    if (next.empty()) {
      verdict.status = ConeStatus::InDualCone;
      return verdict;
    }
    frontier = std::move(next);
  }
  // A group whose elements all have length <= max_len closes one level later.
  for (const Element& e : frontier)
    for (std::size_t s = 0; s < d.rank(); ++s)
      if (!seen.count(matrix_key(right_reflect(d, e.m, s, side), field))) {
        verdict.status = ConeStatus::NotDeterminedUpTo;
        return verdict;
      }
  verdict.status = ConeStatus::InDualCone;
  return verdict;
}

namespace {

Scalar cross(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

std::string oriented_key(const Vec& v, const Field& field) {
  Scalar big = field.zero();
  for (const Scalar& x : v) {
    const Scalar ax = field.sign(x) < 0 ? -x : x;
    if (field.less(big, ax)) big = ax;
  }
  return vector_key(scaled(v, field.one() / big), field);
}

PlanarCone planar_dual_cone(const CoxeterDatum& pair, Side side) {
  const Field& field = pair.field();
  // Every element of the finite dihedral group, deduplicated by matrix.
  std::vector<Matrix> elements{Matrix::identity(2, field)};
  std::set<std::string> seen{matrix_key(elements.front(), field)};
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t s = 0; s < 2; ++s) {
      Matrix m = right_reflect(pair, elements[i], s, side);
      if (seen.insert(matrix_key(m, field)).second) elements.push_back(std::move(m));
    }
  }
  std::vector<std::vector<Vec>> cones;
  for (const Matrix& m : elements) cones.push_back({m.column(0), m.column(1)});
  return PlanarCone{side, intersect_planar_cones(cones, field)};
}

}  // namespace

bool in_planar_cone(const std::vector<Vec>& rays, const Vec& x, const Field& field) {
  if (x.size() != 2) throw Error(ErrorKind::NotRank2, "planar cones live in two coordinates");
  if (rays.empty()) return classify(x, field) == VectorSign::Zero;
  if (rays.size() == 1) {
    const Vec& u = rays.front();
    return field.is_zero(cross(u, x)) && field.sign(dot(u, x)) >= 0;
  }
  const Vec& u = rays[0];
  const Vec& v = rays[1];
  const Scalar det = cross(u, v);
  if (field.is_zero(det)) throw Error(ErrorKind::Precondition, "planar cone rays are parallel");
  const Scalar lambda = cross(x, v) / det;
  const Scalar mu = cross(u, x) / det;
  return field.sign(lambda) >= 0 && field.sign(mu) >= 0;
}

std::vector<Vec> intersect_planar_cones(const std::vector<std::vector<Vec>>& cones, const Field& field) {
  std::vector<Vec> candidates;
  std::set<std::string> candidate_keys;
  for (const auto& cone : cones) {
    if (cone.size() != 2) throw Error(ErrorKind::Precondition, "planar cones are spanned by two rays");
    for (const Vec& c : cone)
      if (candidate_keys.insert(oriented_key(c, field)).second) candidates.push_back(c);
  }
  std::vector<Vec> kept;
  for (const Vec& c : candidates) {
    if (std::all_of(cones.begin(), cones.end(), [&](const auto& cone) { return in_planar_cone(cone, c, field); })) {
      kept.push_back(c);
    }
  }
  if (kept.size() <= 1) return kept;
  auto most = [&](bool clockwise) -> const Vec* {
    for (const Vec& a : kept) {
      bool extreme = true;
      for (const Vec& k : kept) {
        const int sg = field.sign(clockwise ? cross(a, k) : cross(k, a));
        if (sg < 0) extreme = false;
      }
      if (extreme) return &a;
    }
    return nullptr;
  };
  const Vec* first = most(true);
  const Vec* last = most(false);
  if (!first || !last) throw Error(ErrorKind::Precondition, "planar intersection is not pointed");
  if (field.is_zero(cross(*first, *last))) return {*first};
  return {*first, *last};
}

Rank2DualCones dual_cone_rank2(const CoxeterDatum& d, std::size_t r, std::size_t s) {
  if (r == s || r >= d.rank() || s >= d.rank()) throw Error(ErrorKind::NotRank2, "need two distinct generators");
  require_c6(d);
  if (is_infinite(d.bond(r, s))) throw Error(ErrorKind::InfiniteBond, "dual_cone_rank2 needs a finite bond");
  CoxeterDatum pair = restrict(d, {d.label(r), d.label(s)});
  PlanarCone one = planar_dual_cone(pair, Side::One);
  PlanarCone two = planar_dual_cone(pair, Side::Two);
  return {std::min(r, s), std::max(r, s), std::move(pair), std::move(one), std::move(two)};
}

NonpositivityResult check_nonpositivity(const CoxeterDatum& d, const Vec& v1, const Vec& v2, const ConeVerdict& cert1,
                                        const ConeVerdict& cert2) {
  auto usable = [](const ConeVerdict& c) {
    return c.status == ConeStatus::InDualCone || c.status == ConeStatus::NotDeterminedUpTo;
  };
  if (!usable(cert1) || !usable(cert2)) {
    throw Error(ErrorKind::Uncertified, "both vectors need a dual-cone certificate");
  }
  NonpositivityResult out;
  out.value = pairing(d, v1, v2);
  out.holds = d.field().sign(out.value) <= 0;
  out.definitive = cert1.status == ConeStatus::InDualCone && cert2.status == ConeStatus::InDualCone;
  return out;
}

Refutation refute_positive_pairing(const CoxeterDatum& d, const Vec& v1, const Vec& v2, std::optional<Functional> f1,
                                   std::optional<Functional> f2, long cap) {
  require_c6(d);
  const Field& field = d.field();
  const std::size_t n = d.rank();
  if (v1.size() != n || v2.size() != n) throw Error(ErrorKind::Precondition, "vector length differs from rank");
  const Scalar p = pairing(d, v1, v2);
  if (field.sign(p) <= 0) throw Error(ErrorKind::Precondition, "refuter needs <v1, v2> > 0");
  if (!f1) f1 = Functional{Side::One, Vec(n, field.one())};
  if (!f2) f2 = Functional{Side::Two, Vec(n, field.one())};

  std::vector<std::size_t> k_set;
  for (std::size_t s = 0; s < n; ++s)
    if (!field.is_zero(v1[s]) || !field.is_zero(v2[s])) k_set.push_back(s);
  for (std::size_t s : k_set) {
    if (field.less(f1->values[s], field.one()) || field.less(f2->values[s], field.one())) {
      throw Error(ErrorKind::Precondition, "f1 and f2 must be at least 1 on the simple roots of the support");
    }
  }

  Refutation out;
  Vec z = scaled(v1, field.one() / p);
  Vec x = v2;
  const Scalar f1v1 = evaluate(*f1, z);
  out.epsilon = field.from_int(2) / (field.from_int(static_cast<long>(k_set.size())) * f1v1);
  const Scalar ratio = evaluate(*f2, x) / out.epsilon;
  out.bound = static_cast<long>(std::ceil(ratio.to_double() - 1e-12));
  if (field.mode() == Mode::Exact) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), ratio.rational().get_num_mpz_t(), ratio.rational().get_den_mpz_t());
    out.bound = c.get_si();
  }
  const Scalar half_eps = out.epsilon / field.from_int(2);

  std::vector<std::size_t> x_word;
  std::vector<std::size_t> z_word;
  for (long step = 0;; ++step) {
    if (has_negative_entry(x, field)) {
      out.rejected = Side::Two;
      out.witness.letters.assign(x_word.rbegin(), x_word.rend());
      return out;
    }
    if (has_negative_entry(z, field)) {
      out.rejected = Side::One;
      out.witness.letters.assign(z_word.rbegin(), z_word.rend());
      return out;
    }
    if (step >= cap) throw Error(ErrorKind::StepCapExceeded, "refuter exceeded its step cap");
    std::size_t pick = n;
    for (std::size_t s : k_set) {
      if (!field.less(pairing(d, simple_root(d, s), x), half_eps)) {
        pick = s;
        break;
      }
    }
    if (pick == n) throw Error(ErrorKind::NoDescentAvailable, "no generator meets the epsilon/2 threshold");
    RefutationStep rec;
    rec.generator = pick;
    x = apply_reflection(d, pick, Side::Two, std::move(x));
    x_word.push_back(pick);
    if (field.sign(pairing(d, z, simple_root(d, pick))) >= 0) {
      z = apply_reflection(d, pick, Side::One, std::move(z));
      z_word.push_back(pick);
      rec.z_moved = true;
    }
    rec.x = x;
    rec.z = z;
    out.steps.push_back(std::move(rec));
  }
}

}  // namespace coxdatum
