#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "coxdatum/errors.hpp"
#include "coxdatum/io.hpp"
#include "oracle.hpp"

using namespace coxdatum;
using oracle::Q;

namespace {

std::string data(const std::string& name) { return std::string(COXDATUM_DATA_DIR) + "/" + name; }

Matrix exact(const oracle::QMat& m) {
  std::vector<Vec> rows;
  for (const auto& r : m) rows.push_back(oracle::to_vec(r));
  return Matrix::from_rows(rows);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::Precondition;
}

bool has_violation(const ValidationReport& r, const std::string& cond, int s = -2, int t = -2) {
  for (const auto& v : r.violations)
    if (v.condition == cond && !v.warning && (s == -2 || (v.s == s && v.t == t))) return true;
  return false;
}

}  // namespace

TEST_CASE("triangle pairing and coxeter matrix") {
  const CoxeterDatum d = builtin_example("paper-triangle");
  CHECK(oracle::to_qmat(d.pairing()) == oracle::triangle());
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t t = 0; t < 3; ++t) CHECK(d.bond(s, t) == (s == t ? 1 : 3));
  CHECK(d.index_of("t") == 2);
  CHECK(kind_of([&] { d.index_of("x"); }) == ErrorKind::UnknownGenerator);
}

TEST_CASE("file and builtin agree") {
  const CoxeterDatum f = validated(load_datum(data("paper-triangle.json")));
  CHECK(f.pairing() == builtin_example("paper-triangle").pairing());
  CHECK(f.generators() == std::vector<std::string>{"r", "s", "t"});
}

TEST_CASE("coxeter parameters from pairing products") {
  const Field q = Field::exact();
  struct Case {
    Q a, b;
    Bond m;
  };
  for (const Case& c : {Case{0, 0, 2}, Case{Q(-1, 2), Q(-1, 2), 3}, Case{-1, Q(-1, 2), 4}, Case{Q(-3, 2), Q(-1, 2), 6},
                        Case{-1, -1, kInfiniteBond}, Case{-3, -2, kInfiniteBond}}) {
    const auto res = derive_coxeter_matrix(exact({{1, c.a}, {c.b, 1}}), q);
    CHECK(res.errors.empty());
    CHECK(res.coxeter[0][1] == c.m);
    CHECK(res.coxeter[1][0] == c.m);
  }
  CHECK_FALSE(derive_coxeter_matrix(exact({{1, Q(-1, 3)}, {-1, 1}}), q).errors.empty());

  const Field fl = Field::floating(1e-9);
  for (int m = 3; m <= 9; ++m) {
    const double c = std::cos(M_PI / m);
    const Matrix a = Matrix::from_rows({{fl.one(), fl.from_double(-c)}, {fl.from_double(-c), fl.one()}});
    const auto res = derive_coxeter_matrix(a, fl);
    CHECK(res.errors.empty());
    CHECK(res.coxeter[0][1] == m);
  }
}

TEST_CASE("validation flags each condition") {
  const ValidationReport bad2 = validate(load_datum(data("bad-c2.json")));
  CHECK_FALSE(bad2.valid);
  CHECK(has_violation(bad2, "C2", 0, 1));

  const ValidationReport bad1 = validate(load_datum(data("corrupted-triangle.json")));
  CHECK_FALSE(bad1.valid);
  CHECK(has_violation(bad1, "C1", 2, 2));

  // Zero on one side only breaks C4.
  const CoxeterDatum c4({"r", "s"}, exact({{1, 0}, {Q(-1, 2), 1}}), Field::exact());
  CHECK(has_violation(validate(c4), "C4"));

  // Product 1/3 is not cos^2(pi/m).
  const CoxeterDatum c3({"r", "s"}, exact({{1, Q(-1, 3)}, {-1, 1}}), Field::exact());
  CHECK(has_violation(validate(c3), "C3", 0, 1));

  CHECK(kind_of([&] { validated(c3); }) == ErrorKind::InvalidDatum);
  CHECK(kind_of([&] { c3.coxeter(); }) == ErrorKind::InvalidDatum);
  CHECK(validate(load_datum(data("triangle-realized.json"))).valid);
  CHECK(validate(load_datum(data("dihedral-5-float.json"))).valid);
}

TEST_CASE("realized data: consistency and C5") {
  // alpha_r = alpha_s in V1 gives a dependent but valid realization;
  // alpha_s = -alpha_r puts 0 in the positive span.
  const Field q = Field::exact();
  auto realized = [&](const oracle::QMat& p1) {
    ConcreteRealization r;
    r.p1 = exact(p1);
    r.p2 = exact({{1, 0}, {0, 1}});
    r.form = exact({{1, -1}});
    return r;
  };
  // With P1 = [1 1] (1 x 2), A = P1^T B P2 = [[1,-1],[1,-1]]: not a datum, but a
  // mismatched A must be caught as inconsistency first.
  const CoxeterDatum mismatch({"r", "s"}, exact({{1, -1}, {-1, 1}}), q, realized({{1, 1}}));
  CHECK(has_violation(validate(mismatch), "consistency"));

  const CoxeterDatum neg({"r", "s"}, exact({{1, -1}, {-1, 1}}), q, realized({{1, -1}}));
  const ValidationReport rep = validate(neg);
  CHECK(has_violation(rep, "C5"));
  REQUIRE(rep.c5_side1.has_value());
  CHECK(rep.c5_side1->verdict == C5Verdict::Violated);
}

TEST_CASE("C5 certificates verify on random column sets") {
  std::mt19937 rng(7);
  const Field q = Field::exact();
  int certified = 0, violated = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 2 + trial % 2, cols = 2 + trial % 3;
    oracle::QMat m(rows);
    for (auto& r : m) r = oracle::random_vec(rng, cols, -3, 4);
    const C5Result res = check_c5(exact(m), q);
    if (res.verdict == C5Verdict::Certified) {
      ++certified;
      const oracle::QVec f = oracle::to_qvec(res.functional);
      REQUIRE(f.size() == rows);
      for (std::size_t j = 0; j < cols; ++j) {
        Q val = 0;
        for (std::size_t i = 0; i < rows; ++i) val += f[i] * m[i][j];
        CHECK(sgn(val) > 0);
      }
    } else {
      REQUIRE(res.verdict == C5Verdict::Violated);
      ++violated;
      const oracle::QVec lam = oracle::to_qvec(res.combination);
      REQUIRE(lam.size() == cols);
      CHECK(oracle::nonneg(lam));
      bool nonzero = false;
      for (const auto& x : lam) nonzero |= sgn(x) != 0;
      CHECK(nonzero);
      CHECK(oracle::apply(m, lam) == oracle::QVec(rows, 0));
    }
  }
  CHECK(certified > 0);
  CHECK(violated > 0);
}

TEST_CASE("restrict keeps parent order and entries") {
  const CoxeterDatum d = builtin_example("paper-triangle");
  const CoxeterDatum sub = restrict(d, {"t", "r"});
  CHECK(sub.generators() == std::vector<std::string>{"r", "t"});
  CHECK(sub.pairing(0, 1).rational() == Q(-5, 2));
  CHECK(sub.pairing(1, 0).rational() == Q(-1, 10));
  CHECK(sub.bond(0, 1) == 3);
}

TEST_CASE("classical form squares to the pairing products") {
  const CoxeterDatum d = builtin_example("paper-triangle");
  const oracle::QMat c = oracle::to_qmat(classical_form(d));
  const oracle::QMat a = oracle::triangle();
  for (std::size_t s = 0; s < 3; ++s) {
    CHECK(c[s][s] == 1);
    for (std::size_t t = 0; t < 3; ++t) {
      CHECK(c[s][t] == c[t][s]);
      if (s != t) {
        CHECK(sgn(c[s][t]) <= 0);
        CHECK(c[s][t] * c[s][t] == a[s][t] * a[t][s]);
      }
    }
  }
  CHECK(classical_datum(d).coxeter() == d.coxeter());
  CHECK(kind_of([] { classical_form(builtin_example("dihedral-4")); }) == ErrorKind::ExactSqrtUnavailable);
}

TEST_CASE("builtin examples") {
  for (int m : {2, 3, 4, 6}) {
    const CoxeterDatum d = builtin_example("dihedral-" + std::to_string(m));
    CHECK(d.field().mode() == Mode::Exact);
    CHECK(d.bond(0, 1) == m);
  }
  for (int m : {5, 7, 8}) {
    const CoxeterDatum d = builtin_example("dihedral-" + std::to_string(m));
    CHECK(d.field().mode() == Mode::Float);
    CHECK(d.bond(0, 1) == m);
  }
  for (const char* name : {"infinite-gamma", "infinite-gamma-1", "infinite-gamma(3/2)", "infinite-gamma(γ=2)"})
    CHECK(is_infinite(builtin_example(name).bond(0, 1)));
  CHECK(builtin_example("infinite-gamma-3/2").pairing(0, 1).rational() == Q(-3, 2));
  CHECK(kind_of([] { builtin_example("infinite-gamma-1/2"); }) == ErrorKind::UnknownExample);
  CHECK(kind_of([] { builtin_example("dihedral-x"); }) == ErrorKind::UnknownExample);
  CHECK(kind_of([] { builtin_example("nope"); }) == ErrorKind::UnknownExample);
}

TEST_CASE("constructor rejects malformed input") {
  const Field q = Field::exact();
  CHECK_THROWS(CoxeterDatum({}, Matrix(), q));
  CHECK_THROWS(CoxeterDatum({"r", "r"}, exact({{1, 0}, {0, 1}}), q));
  CHECK_THROWS(CoxeterDatum({"r", "s"}, exact({{1, 0, 0}, {0, 1, 0}}), q));
}
