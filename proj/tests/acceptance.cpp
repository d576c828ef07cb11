// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "coxdatum/classical.hpp"
#include "coxdatum/cone.hpp"
#include "coxdatum/errors.hpp"
#include "oracle.hpp"

using namespace coxdatum;
using oracle::Q;
using oracle::QMat;
using oracle::QVec;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

const CoxeterDatum& triangle() {
  static const CoxeterDatum d = builtin_example("paper-triangle");
  return d;
}

Outcome chain() {
  Outcome o;
  const auto t0 = Clock::now();
  const CoxeterDatum& d = triangle();
  const std::vector<std::pair<std::string, QVec>> expected = {
      {"s", {1, Q(1, 2), 0}},          {"r,s", {0, Q(1, 2), 0}},
      {"t,r,s", {0, Q(1, 2), Q(1, 6)}}, {"s,t,r,s", {0, 0, Q(1, 6)}},
      {"r,s,t,r,s", {Q(1, 30), 0, Q(1, 6)}}, {"t,r,s,t,r,s", {Q(1, 30), 0, 0}},
  };
  for (const auto& [w, v] : expected)
    o.require(oracle::to_qvec(apply_word(d, parse_word(d, w), Side::One, simple_root(d, 0))) == v, "image under " + w);
  const double secs = seconds_since(t0);
  o.require(secs < 1.0, "runtime " + std::to_string(secs));
  if (o.pass) o.detail = "6 images exact in " + std::to_string(secs) + " s";
  return o;
}

Outcome order() {
  Outcome o;
  const CoxeterDatum& d = triangle();
  int checked = 0;
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t t = s + 1; t < 3; ++t) {
      o.require(product_order(d, s, t, Side::One, 1000) == long(d.bond(s, t)), "triangle pair");
      ++checked;
    }
  for (int m : {2, 3, 4, 6, 5, 7}) {
    const CoxeterDatum dm = builtin_example("dihedral-" + std::to_string(m));
    o.require((m == 5 || m == 7) == (dm.field().mode() == Mode::Float), "backend for m=" + std::to_string(m));
    o.require(std::abs(dm.field().epsilon() - 1e-9) < 1e-15 || dm.field().mode() == Mode::Exact, "float tolerance");
    for (Side side : {Side::One, Side::Two})
      o.require(product_order(dm, 0, 1, side, 1000) == long(m) && dm.bond(0, 1) == m, "dihedral m=" + std::to_string(m));
    ++checked;
  }
  for (const char* g : {"infinite-gamma-1", "infinite-gamma-2"}) {
    o.require(!product_order(builtin_example(g), 0, 1, Side::One, 1000).has_value(), std::string(g) + " under cap");
    ++checked;
  }
  if (o.pass) o.detail = std::to_string(checked) + " pairs";
  return o;
}

Outcome closed_form() {
  Outcome o;
  int series = 0;
  for (const char* name : {"dihedral-2", "dihedral-3", "dihedral-4", "dihedral-6", "infinite-gamma-1", "infinite-gamma-2"}) {
    const CoxeterDatum d = builtin_example(name);
    const QMat a = oracle::to_qmat(d.pairing());
    for (int side : {1, 2}) {
      const QMat step = oracle::word(a, {0, 1}, side);
      QVec iter = oracle::unit(2, 0);
      for (long n = 0; n <= 30; ++n) {
        o.require(oracle::to_qvec(dihedral_orbit_closed_form(d, 0, 1, n, side == 1 ? Side::One : Side::Two).coeffs) ==
                      iter,
                  std::string(name) + " n=" + std::to_string(n));
        iter = oracle::apply(step, iter);
      }
      ++series;
    }
  }
  double worst = 0;
  for (const char* name : {"dihedral-5", "dihedral-7"}) {
    const CoxeterDatum d = builtin_example(name);
    for (Side side : {Side::One, Side::Two}) {
      const Matrix step = word_matrix(d, GroupWord{{0, 1}}, side).m;
      Vec iter = simple_root(d, 0);
      for (long n = 0; n <= 30; ++n) {
        const Vec cf = dihedral_orbit_closed_form(d, 0, 1, n, side).coeffs;
        for (std::size_t i = 0; i < 2; ++i) worst = std::max(worst, std::abs(cf[i].to_double() - iter[i].to_double()));
        iter = step * iter;
      }
      ++series;
    }
  }
  o.require(worst <= 1e-9, "float deviation " + std::to_string(worst));
  if (o.pass) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d series, n<=30, float max diff %.2e", series, worst);
    o.detail = buf;
  }
  return o;
}

Outcome dichotomy() {
  Outcome o;
  const CoxeterDatum& d = triangle();
  const QMat a = oracle::triangle();
  const oracle::Ball ball = oracle::ball(a, 12);
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const GroupWord w{oracle::random_word(rng, 3, 12)};
    const long len = ball.length.at(oracle::key(oracle::word(a, w.letters, 1)));
    const ReducedWord red = reduce_word(d, w);
    o.require(long(red.length) == len, "length");
    o.require(long(inversion_set(d, red.word, Side::One).rays.size()) == len, "|N1| = length");
    o.require(long(inversion_set(d, red.word, Side::Two).rays.size()) == len, "|N2| = length");
    for (std::size_t s = 0; s < 3; ++s) {
      const VectorSign s1 = classify(apply_word(d, w, Side::One, simple_root(d, s)), d.field());
      const VectorSign s2 = classify(apply_word(d, w, Side::Two, simple_root(d, s)), d.field());
      o.require(s1 == VectorSign::Positive || s1 == VectorSign::Negative, "sign-definite");
      o.require(s1 == s2, "paired signs");
    }
  }
  if (o.pass) o.detail = "200 words";
  return o;
}

Outcome transport() {
  Outcome o;
  const CoxeterDatum& d = triangle();
  const RootTable t = enumerate_roots(d, Side::One, 6);
  for (const Root& r : t.roots) {
    o.require(depth(d, r.coeffs, Side::One).depth == r.depth, "bfs vs greedy depth");
    const Root p = phi(d, r);
    o.require(depth(d, p.coeffs, Side::Two).depth == r.depth, "dep1 = dep2 o phi");
    o.require(classify(p.coeffs, d.field()) == VectorSign::Positive, "phi positive");
    const Vec neg = scaled(r.coeffs, d.field().from_int(-1));
    Root nr = r;
    nr.coeffs = neg;
    o.require(classify(phi(d, nr).coeffs, d.field()) == VectorSign::Negative, "phi negative");
  }
  std::size_t pairs = 0;
  for (const ScalarChain& ch : scalar_chains(d, t)) {
    const Vec pb = phi(d, t.roots[ch.base_index]).coeffs;
    for (const ChainMember& m : ch.members) {
      o.require(phi(d, t.roots[m.root_index]).coeffs == scaled(pb, d.field().one() / m.scale), "phi(l a) = phi(a)/l");
      ++pairs;
    }
  }
  if (o.pass) o.detail = std::to_string(t.roots.size()) + " roots, " + std::to_string(pairs) + " chain members";
  return o;
}

Outcome chains() {
  Outcome o;
  const CoxeterDatum& d = triangle();
  const RootTable t = enumerate_roots(d, Side::One, 7);
  bool r30 = false, s2 = false;
  for (const ScalarChain& ch : scalar_chains(d, t)) {
    const QVec base = oracle::to_qvec(t.roots[ch.base_index].coeffs);
    for (const ChainMember& m : ch.members) {
      const Root& r = t.roots[m.root_index];
      const QVec ph = oracle::to_qvec(phi(d, r).coeffs);
      if (base == oracle::unit(3, 0) && m.scale.rational() == Q(1, 30)) {
        r30 = r.witness.word.size() == 6 && ph == QVec{30, 0, 0};
      }
      if (base == oracle::unit(3, 1) && m.scale.rational() == Q(1, 2)) s2 = ph == QVec{0, 2, 0};
    }
  }
  o.require(r30, "1/30 alpha_r with length-6 witness and phi = 30 beta_r");
  o.require(s2, "1/2 alpha_s with phi = 2 beta_s");
  if (o.pass) o.detail = "1/30 <-> 30 and 1/2 <-> 2";
  return o;
}

Outcome suite() {
  Outcome o;
  const auto t0 = Clock::now();
  const CoxeterDatum& d = triangle();
  const RootTable t = enumerate_roots(d, Side::One, 6);
  const ComparisonReport rep = compare_table(d, t, true);
  std::size_t equalities = 0;
  for (const PairingRow& row : rep.pairings) equalities += row.equality;
  const double secs = seconds_since(t0);
  o.require(rep.violations() == 0, std::to_string(rep.violations()) + " violations");
  o.require(equalities >= t.roots.size(), "diagonal equality cases");
  o.require(secs < 30.0, "runtime " + std::to_string(secs));
  if (o.pass) {
    o.detail = std::to_string(rep.coefficients.size()) + " coefficient rows, " + std::to_string(rep.pairings.size()) +
               " pairs, 0 violations in " + std::to_string(secs) + " s";
  }
  return o;
}

Outcome tits_finite() {
  Outcome o;
  const CoxeterDatum d = restrict(triangle(), {"r", "s"});
  const Rank2DualCones c = dual_cone_rank2(d, 0, 1);
  const Field& f = d.field();
  auto sample = [&](const PlanarCone& cone, std::mt19937& rng) {
    std::vector<Vec> out = cone.rays;
    out.push_back({f.zero(), f.zero()});
    std::uniform_int_distribution<int> coef(0, 7);
    for (int i = 0; i < 50; ++i) {
      Vec v{f.zero(), f.zero()};
      for (const Vec& r : cone.rays) v = added(v, scaled(r, f.from_ratio(coef(rng), 1 + coef(rng))));
      out.push_back(v);
    }
    return out;
  };
  std::mt19937 rng(8);
  const auto u1 = sample(c.side1, rng), u2 = sample(c.side2, rng);
  // Each sample must survive the full element sweep, and pair nonpositively.
  for (const Vec& v : u1) o.require(dual_membership(d, v, Side::One, 10).status == ConeStatus::InDualCone, "side1 sample");
  for (const Vec& v : u2) o.require(dual_membership(d, v, Side::Two, 10).status == ConeStatus::InDualCone, "side2 sample");
  for (const Vec& a : u1)
    for (const Vec& b : u2) o.require(f.sign(pairing(d, a, b)) <= 0, "cross pairing");
  if (o.pass) {
    o.detail = std::to_string(c.side1.rays.size()) + "+" + std::to_string(c.side2.rays.size()) + " extreme rays, " +
               std::to_string(u1.size() * u2.size()) + " cross pairings <= 0";
  }
  return o;
}

Outcome refuter() {
  Outcome o;
  const std::vector<CoxeterDatum> data = {triangle(), restrict(triangle(), {"r", "t"}), builtin_example("dihedral-4"),
                                          builtin_example("infinite-gamma-2")};
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> fval(1, 4);
  int built = 0;
  long worst_slack = 1L << 40;
  for (int trial = 0; built < 20 && trial < 1000; ++trial) {
    const CoxeterDatum& d = data[trial % data.size()];
    const QMat a = oracle::to_qmat(d.pairing());
    const std::size_t n = d.rank();
    QVec v1 = oracle::random_vec(rng, n, 0, 4), v2 = oracle::random_vec(rng, n, 0, 4);
    const Q p = oracle::pair(a, v1, v2);
    if (sgn(p) <= 0) continue;
    for (auto& x : v1) x /= p;
    QVec f1(n), f2(n);
    for (auto& x : f1) x = fval(rng);
    for (auto& x : f2) x = fval(rng);
    Q f1v1 = 0, f2v2 = 0;
    long k = 0;
    for (std::size_t s = 0; s < n; ++s) {
      f1v1 += f1[s] * v1[s];
      f2v2 += f2[s] * v2[s];
      k += sgn(v1[s]) != 0 || sgn(v2[s]) != 0;
    }
    const Q ratio = f2v2 * k * f1v1 / 2;
    mpz_class limit;
    mpz_cdiv_q(limit.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    const long allowed = limit.get_si() + 2;
    const Refutation ref = refute_positive_pairing(d, oracle::to_vec(v1), oracle::to_vec(v2),
                                                   Functional{Side::One, oracle::to_vec(f1)},
                                                   Functional{Side::Two, oracle::to_vec(f2)});
    o.require(long(ref.steps.size()) <= allowed, "step bound");
    worst_slack = std::min(worst_slack, allowed - long(ref.steps.size()));
    const QVec& target = ref.rejected == Side::One ? v1 : v2;
    o.require(!oracle::nonneg(oracle::apply(oracle::word(a, ref.witness.letters, side_number(ref.rejected)), target)),
              "witness does not expel");
    ++built;
  }
  o.require(built == 20, "only " + std::to_string(built) + " inputs built");
  if (o.pass) o.detail = "20 inputs, min slack to bound " + std::to_string(worst_slack);
  return o;
}

Outcome finiteness() {
  Outcome o;
  const FinitenessResult fin = is_finite_group(restrict(triangle(), {"r", "s"}), 10);
  o.require(fin.finite && fin.ray_count == 3, "finite with 3 rays");
  for (const char* name : {"paper-triangle", "infinite-gamma-1", "infinite-gamma-2"}) {
    const FinitenessResult r = is_finite_group(builtin_example(name), 10);
    o.require(!r.finite, std::string(name) + " reported finite");
    for (std::size_t i = 1; i < r.frontier.size(); ++i)
      o.require(r.frontier[i] > r.frontier[i - 1], std::string(name) + " frontier stalls");
  }
  if (o.pass) o.detail = "finite(3 rays); triangle and infinite-gamma not determined at budget 10";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked root chain, exact", chain},
      {"product order equals coxeter parameter", order},
      {"dihedral closed form matches iteration", closed_form},
      {"sign dichotomy and inversion-set length", dichotomy},
      {"depth and phi transport", transport},
      {"scalar chains with reciprocal phi scales", chains},
      {"classical comparison inequalities", suite},
      {"finite rank-two dual cones pair nonpositively", tits_finite},
      {"refuter bound and witnesses", refuter},
      {"finiteness detection", finiteness},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.detail.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
