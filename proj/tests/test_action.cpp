#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxdatum/action.hpp"
#include "coxdatum/errors.hpp"
#include "oracle.hpp"

using namespace coxdatum;
using oracle::Q;
using oracle::QVec;

namespace {

const CoxeterDatum& triangle() {
  static const CoxeterDatum d = builtin_example("paper-triangle");
  return d;
}

GroupWord gw(std::vector<std::size_t> letters) { return GroupWord{std::move(letters)}; }

Side side_of(int i) { return i == 1 ? Side::One : Side::Two; }

}  // namespace

TEST_CASE("worked chain of alpha_r images") {
  const CoxeterDatum& d = triangle();
  const std::vector<std::pair<std::string, QVec>> chain = {
      {"s", {1, Q(1, 2), 0}},
      {"r,s", {0, Q(1, 2), 0}},
      {"t,r,s", {0, Q(1, 2), Q(1, 6)}},
      {"s,t,r,s", {0, 0, Q(1, 6)}},
      {"r,s,t,r,s", {Q(1, 30), 0, Q(1, 6)}},
      {"t,r,s,t,r,s", {Q(1, 30), 0, 0}},
  };
  for (const auto& [text, expected] : chain) {
    const GroupWord w = parse_word(d, text);
    CHECK(oracle::to_qvec(apply_word(d, w, Side::One, simple_root(d, 0))) == expected);
    CHECK(oracle::apply(oracle::word(oracle::triangle(), w.letters, 1), oracle::unit(3, 0)) == expected);
  }
}

TEST_CASE("reflection matrices match the defining formulas and are involutions") {
  for (const char* name : {"paper-triangle", "dihedral-4", "dihedral-6", "infinite-gamma-2"}) {
    const CoxeterDatum d = builtin_example(name);
    const oracle::QMat a = oracle::to_qmat(d.pairing());
    for (std::size_t s = 0; s < d.rank(); ++s) {
      for (int side : {1, 2}) {
        const Matrix r = reflection_matrix(d, s, side_of(side)).m;
        CHECK(oracle::to_qmat(r) == (side == 1 ? oracle::refl1(a, s) : oracle::refl2(a, s)));
        CHECK(is_identity(r * r, d.field()));
        CHECK(oracle::to_qvec(apply_reflection(d, s, side_of(side), simple_root(d, s))) ==
              oracle::to_qvec(scaled(simple_root(d, s), d.field().from_int(-1))));
      }
    }
  }
}

TEST_CASE("word matrices, inverses and the pairing are W-invariant") {
  const CoxeterDatum& d = triangle();
  const oracle::QMat a = oracle::triangle();
  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const GroupWord w = gw(oracle::random_word(rng, 3, 12));
    const QVec lam = oracle::random_vec(rng, 3, -5, 5), mu = oracle::random_vec(rng, 3, -5, 5);
    const Matrix m1 = word_matrix(d, w, Side::One).m, m2 = word_matrix(d, w, Side::Two).m;
    CHECK(oracle::to_qmat(m1) == oracle::word(a, w.letters, 1));
    CHECK(oracle::to_qmat(m2) == oracle::word(a, w.letters, 2));
    CHECK(oracle::to_qvec(m1 * oracle::to_vec(lam)) ==
          oracle::to_qvec(apply_word(d, w, Side::One, oracle::to_vec(lam))));
    CHECK(is_identity(word_matrix(d, inverse(w), Side::One).m * m1, d.field()));
    CHECK(word_matrix(d, concat(w, inverse(w)), Side::Two).m == Matrix::identity(3, d.field()));
    const Q before = oracle::pair(a, lam, mu);
    const Q after = oracle::pair(a, oracle::apply(oracle::to_qmat(m1), lam), oracle::apply(oracle::to_qmat(m2), mu));
    CHECK(before == after);
    CHECK(pairing(d, oracle::to_vec(lam), oracle::to_vec(mu)).rational() == before);
  }
  CHECK_THROWS(pairing(d, FreeCoeffVector{Side::Two, simple_root(d, 0)}, FreeCoeffVector{Side::Two, simple_root(d, 0)}));
}

TEST_CASE("word parsing") {
  const CoxeterDatum& d = triangle();
  CHECK(parse_word(d, "r, s t").letters == std::vector<std::size_t>{0, 1, 2});
  CHECK(parse_word(d, "").empty());
  CHECK(word_labels(d, gw({2, 0})) == std::vector<std::string>{"t", "r"});
  try {
    parse_word(d, "r,x");
    FAIL("accepted unknown letter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownGenerator);
  }
}

TEST_CASE("closed form of the dihedral orbit agrees with iteration") {
  for (const char* name : {"dihedral-2", "dihedral-3", "dihedral-4", "dihedral-6", "infinite-gamma-1",
                           "infinite-gamma-2", "infinite-gamma-3/2"}) {
    const CoxeterDatum d = builtin_example(name);
    const oracle::QMat a = oracle::to_qmat(d.pairing());
    for (int side : {1, 2}) {
      for (std::size_t s : {0u, 1u}) {
        const std::size_t t = 1 - s;
        QVec iter = oracle::unit(2, s);
        const oracle::QMat step = side == 1 ? oracle::mul(oracle::refl1(a, s), oracle::refl1(a, t))
                                            : oracle::mul(oracle::refl2(a, s), oracle::refl2(a, t));
        for (long n = 0; n <= 30; ++n) {
          const FreeCoeffVector cf = dihedral_orbit_closed_form(d, s, t, n, side_of(side));
          CHECK(cf.side == side_of(side));
          CHECK_MESSAGE(oracle::to_qvec(cf.coeffs) == iter, name << " side " << side << " n " << n);
          iter = oracle::apply(step, iter);
        }
      }
    }
  }
  for (const char* name : {"dihedral-5", "dihedral-7"}) {
    const CoxeterDatum d = builtin_example(name);
    for (int side : {1, 2}) {
      const Matrix step = word_matrix(d, gw({0, 1}), side_of(side)).m;
      Vec iter = simple_root(d, 0);
      for (long n = 0; n <= 30; ++n) {
        const Vec cf = dihedral_orbit_closed_form(d, 0, 1, n, side_of(side)).coeffs;
        for (std::size_t i = 0; i < 2; ++i) CHECK(std::abs(cf[i].to_double() - iter[i].to_double()) <= 1e-9);
        iter = step * iter;
      }
    }
  }
}

TEST_CASE("product order equals the coxeter parameter") {
  const CoxeterDatum& d = triangle();
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t t = 0; t < 3; ++t)
      if (s != t)
        for (int side : {1, 2}) CHECK(product_order(d, s, t, side_of(side), 1000) == 3L);
  for (int m = 2; m <= 8; ++m) {
    const CoxeterDatum dm = builtin_example("dihedral-" + std::to_string(m));
    CHECK(product_order(dm, 0, 1, Side::One, 1000) == long(m));
    CHECK(dihedral_longest_word(dm, 0, 1).size() == std::size_t(m));
  }
  const CoxeterDatum inf = builtin_example("infinite-gamma-1");
  CHECK_FALSE(product_order(inf, 0, 1, Side::One, 1000).has_value());
  CHECK_THROWS(dihedral_longest_word(inf, 0, 1));
}

TEST_CASE("reduced words, inversion sets and sign dichotomy against a brute-force length") {
  const CoxeterDatum& d = triangle();
  const oracle::QMat a = oracle::triangle();
  const oracle::Ball ball = oracle::ball(a, 13);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const GroupWord w = gw(oracle::random_word(rng, 3, 12));
    const oracle::QMat m1 = oracle::word(a, w.letters, 1), m2 = oracle::word(a, w.letters, 2);
    const long len = ball.length.at(oracle::key(m1));

    const ReducedWord red = reduce_word(d, w);
    CHECK(long(red.length) == len);
    CHECK(red.word.size() == red.length);
    CHECK(oracle::word(a, red.word.letters, 1) == m1);

    for (int side : {1, 2}) CHECK(long(inversion_set(d, red.word, side_of(side)).rays.size()) == len);

    for (std::size_t s = 0; s < 3; ++s) {
      const QVec img1 = oracle::apply(m1, oracle::unit(3, s)), img2 = oracle::apply(m2, oracle::unit(3, s));
      CHECK((oracle::nonneg(img1) || oracle::nonpos(img1)));
      CHECK(oracle::nonneg(img1) == oracle::nonneg(img2));
      std::vector<std::size_t> ws = w.letters;
      ws.push_back(s);
      const long len_ws = ball.length.at(oracle::key(oracle::word(a, ws, 1)));
      CHECK(std::abs(len_ws - len) == 1);
      if (len_ws > len) CHECK(oracle::nonneg(img1));
      else CHECK(oracle::nonpos(img1));
    }
  }
}

TEST_CASE("inversion set of a non-reduced word is rejected") {
  const CoxeterDatum& d = triangle();
  try {
    inversion_set(d, gw({0, 0}), Side::One);
    FAIL("accepted r r");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DuplicateRay);
  }
  CHECK(reduce_word(d, parse_word(d, "t,r,s,t,r,s")).length == 6);
  CHECK(reduce_word(d, parse_word(d, "r,s,r,s,r")).length == 1);
}
