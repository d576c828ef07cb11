#include "coxdatum/datum.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "coxdatum/errors.hpp"
#include "coxdatum/lp.hpp"

namespace coxdatum {

CoxeterDatum::CoxeterDatum(std::vector<std::string> generators, Matrix pairing, Field field,
                           std::optional<ConcreteRealization> realization)
    : generators_(std::move(generators)),
      pairing_(std::move(pairing)),
      field_(field),
      realization_(std::move(realization)) {
  if (generators_.empty()) throw Error(ErrorKind::Parse, "a datum needs at least one generator");
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (!seen.insert(g).second) throw Error(ErrorKind::Parse, "duplicate generator label '" + g + "'");
  }
  if (pairing_.rows() != generators_.size() || pairing_.cols() != generators_.size()) {
    throw Error(ErrorKind::Parse, "pairing matrix must be square with one row per generator");
  }
  for (std::size_t i = 0; i < pairing_.rows(); ++i)
    for (std::size_t j = 0; j < pairing_.cols(); ++j) field_.check(pairing_(i, j));
}

const CoxeterMatrix& CoxeterDatum::coxeter() const {
  if (!coxeter_) throw Error(ErrorKind::InvalidDatum, "datum has not been validated");
  return *coxeter_;
}

std::size_t CoxeterDatum::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i] == label) return i;
  throw Error(ErrorKind::UnknownGenerator, "unknown generator '" + std::string(label) + "'");
}

bool ValidationReport::has_errors() const {
  for (const auto& v : violations)
    if (!v.warning) return true;
  return false;
}

CoxeterDerivation derive_coxeter_matrix(const Matrix& pairing, const Field& field) {
  const std::size_t n = pairing.rows();
  CoxeterDerivation out;
  out.coxeter.assign(n, std::vector<Bond>(n, 2));
  for (std::size_t s = 0; s < n; ++s) {
    out.coxeter[s][s] = 1;
    for (std::size_t t = s + 1; t < n; ++t) {
      const Scalar c = pairing(s, t) * pairing(t, s);
      Bond m = -1;
      std::string why;
      const int sc = field.sign(c);
      if (sc < 0) {
        why = "negative product " + c.to_string();
      } else if (sc == 0) {
        m = 2;
      } else if (field.mode() == Mode::Exact) {
        const mpq_class& q = c.rational();
        if (q >= 1) {
          m = kInfiniteBond;
        } else if (q == mpq_class(1, 4)) {
          m = 3;
        } else if (q == mpq_class(1, 2)) {
          m = 4;
        } else if (q == mpq_class(3, 4)) {
          m = 6;
        } else {
          why = "product " + q.get_str() +
                " is not a rational value of cos^2(pi/m); irrational cases need float mode";
        }
      } else {
        const double x = c.to_double();
        if (x >= 1.0 - field.epsilon()) {
          m = kInfiniteBond;
        } else {
          const double guess = std::numbers::pi / std::acos(std::sqrt(x));
          const long cand = std::lround(guess);
          const double target = std::cos(std::numbers::pi / static_cast<double>(cand));
          if (cand >= 3 && std::fabs(target * target - x) <= field.epsilon()) {
            m = static_cast<Bond>(cand);
          } else {
            why = "product " + c.to_string() + " is not cos^2(pi/m) for an integer m";
          }
        }
      }
      if (m < 0) {
        out.errors.push_back({"C3", static_cast<int>(s), static_cast<int>(t), why, false});
        m = 2;
      }
      out.coxeter[s][t] = out.coxeter[t][s] = m;
    }
  }
  return out;
}

C5Result check_c5(const Matrix& columns, const Field& field) {
  const std::size_t dim = columns.rows();
  const std::size_t k = columns.cols();
  C5Result out;
  if (k == 0) {
    out.verdict = C5Verdict::Certified;
    out.functional.assign(dim, field.zero());
    return out;
  }

  auto certifies = [&](const Vec& f) {
    for (std::size_t j = 0; j < k; ++j)
      if (field.sign(dot(f, columns.column(j))) <= 0) return false;
    return true;
  };

  // The coordinate-sum functional settles the common case directly.
  if (dim > 0) {
    Vec ones(dim, field.one());
    if (certifies(ones)) {
      out.verdict = C5Verdict::Certified;
      out.functional = std::move(ones);
      return out;
    }
  }

  // Feasibility of {lambda >= 0 : V lambda = 0, sum lambda = 1}.
  Matrix system(dim + 1, k, field.zero());
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < k; ++j) system(i, j) = columns(i, j);
  for (std::size_t j = 0; j < k; ++j) system(dim, j) = field.one();
  Vec rhs(dim + 1, field.zero());
  rhs[dim] = field.one();

  const FeasibilityResult lp = solve_feasibility(system, rhs, field);
  if (lp.status == Feasibility::Feasible) {
    Vec lambda = lp.solution;
    // Scale so the smallest positive weight is 1.
    std::optional<Scalar> smallest;
    for (const Scalar& x : lambda)
      if (field.sign(x) > 0 && (!smallest || field.less(x, *smallest))) smallest = x;
    if (smallest) lambda = scaled(lambda, field.one() / *smallest);
    Vec residual(dim, field.zero());
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < dim; ++i) residual[i] += lambda[j] * columns(i, j);
    if (classify(residual, field) == VectorSign::Zero && classify(lambda, field) == VectorSign::Positive) {
      out.verdict = C5Verdict::Violated;
      out.combination = std::move(lambda);
    }
    return out;
  }
  if (lp.status == Feasibility::Infeasible) {
    Vec f(lp.farkas.begin(), lp.farkas.begin() + static_cast<std::ptrdiff_t>(dim));
    if (dim > 0 && certifies(f)) {
      out.verdict = C5Verdict::Certified;
      out.functional = std::move(f);
    }
  }
  return out;
}

ValidationReport validate(const CoxeterDatum& datum) {
  ValidationReport report;
  const Field& field = datum.field();
  const std::size_t n = datum.rank();
  const Matrix& a = datum.pairing();
  auto add = [&](std::string cond, std::ptrdiff_t s, std::ptrdiff_t t, std::string msg, bool warning = false) {
    report.violations.push_back({std::move(cond), static_cast<int>(s), static_cast<int>(t), std::move(msg), warning});
  };

  std::vector<std::vector<bool>> pair_ok(n, std::vector<bool>(n, true));
  for (std::size_t s = 0; s < n; ++s) {
    if (!field.equal(a(s, s), field.one())) {
      add("C1", s, s, "<alpha_s, beta_s> = " + a(s, s).to_string() + ", expected 1");
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (s == t) continue;
      if (field.sign(a(s, t)) > 0) {
        add("C2", s, t, "off-diagonal pairing " + a(s, t).to_string() + " is positive");
        pair_ok[s][t] = pair_ok[t][s] = false;
      }
      if (field.is_zero(a(s, t)) != field.is_zero(a(t, s))) {
        add("C4", s, t, "pairing is zero in one direction only");
        pair_ok[s][t] = pair_ok[t][s] = false;
      }
    }
  }

  CoxeterDerivation derived = derive_coxeter_matrix(a, field);
  for (auto& e : derived.errors) {
    if (pair_ok[static_cast<std::size_t>(e.s)][static_cast<std::size_t>(e.t)]) {
      report.violations.push_back(std::move(e));
    }
  }
  report.coxeter = std::move(derived.coxeter);

  if (const auto& real = datum.realization()) {
    bool shapes = real->p1.cols() == n && real->p2.cols() == n && real->form.rows() == real->p1.rows() &&
                  real->form.cols() == real->p2.rows() && real->p1.rows() > 0 && real->p2.rows() > 0;
    if (!shapes) {
      add("shape", -1, -1, "realization matrices have inconsistent shapes");
    } else {
      const Matrix induced = real->p1.transposed() * real->form * real->p2;
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t t = 0; t < n; ++t)
          if (!field.equal(induced(s, t), a(s, t))) {
            add("consistency", s, t,
                "P1^T B P2 gives " + induced(s, t).to_string() + " but pairing has " + a(s, t).to_string());
          }
      report.c5_side1 = check_c5(real->p1, field);
      report.c5_side2 = check_c5(real->p2, field);
      const bool span1 = rank(real->p1, field) == real->p1.rows();
      const bool span2 = rank(real->p2, field) == real->p2.rows();
      report.spans_both = span1 && span2;
      if (!span1) add("C6", -1, -1, "simple roots alpha_s do not span V1", true);
      if (!span2) add("C6", -1, -1, "simple roots beta_s do not span V2", true);
    }
  } else {
    const Matrix free_basis = Matrix::identity(n, field);
    report.c5_side1 = check_c5(free_basis, field);
    report.c5_side2 = report.c5_side1;
  }
  auto c5_entry = [&](const std::optional<C5Result>& r, const char* which) {
    if (!r) return;
    if (r->verdict == C5Verdict::Violated) {
      add("C5", -1, -1, std::string("0 is a positive combination of the ") + which);
    } else if (r->verdict == C5Verdict::Undetermined) {
      add("C5", -1, -1, std::string("C5 undetermined within epsilon for the ") + which);
    }
  };
  c5_entry(report.c5_side1, "alpha_s");
  c5_entry(report.c5_side2, "beta_s");

  report.valid = !report.has_errors();
  return report;
}

CoxeterDatum validated(CoxeterDatum datum) {
  ValidationReport report = validate(datum);
  if (!report.valid) {
    for (const auto& v : report.violations) {
      if (v.warning) continue;
      throw Error(ErrorKind::InvalidDatum, v.condition + " violated: " + v.message);
    }
  }
  if (datum.realization_) datum.realization_->spans_both = report.spans_both;
  datum.coxeter_ = std::move(report.coxeter);
  return datum;
}

CoxeterDatum restrict(const CoxeterDatum& datum, const std::vector<std::string>& labels) {
  if (labels.empty()) throw Error(ErrorKind::Precondition, "restriction needs a nonempty generator set");
  std::set<std::size_t> wanted;
  for (const auto& l : labels) wanted.insert(datum.index_of(l));
  const std::vector<std::size_t> keep(wanted.begin(), wanted.end());
  const Field& field = datum.field();

  std::vector<std::string> gens;
  Matrix a(keep.size(), keep.size(), field.zero());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    gens.push_back(datum.label(keep[i]));
    for (std::size_t j = 0; j < keep.size(); ++j) a(i, j) = datum.pairing(keep[i], keep[j]);
  }
  std::optional<ConcreteRealization> real;
  if (const auto& r = datum.realization()) {
    ConcreteRealization sub;
    sub.p1 = Matrix(r->p1.rows(), keep.size(), field.zero());
    sub.p2 = Matrix(r->p2.rows(), keep.size(), field.zero());
    for (std::size_t j = 0; j < keep.size(); ++j) {
      for (std::size_t i = 0; i < r->p1.rows(); ++i) sub.p1(i, j) = r->p1(i, keep[j]);
      for (std::size_t i = 0; i < r->p2.rows(); ++i) sub.p2(i, j) = r->p2(i, keep[j]);
    }
    sub.form = r->form;
    real = std::move(sub);
  }
  CoxeterDatum sub(std::move(gens), std::move(a), field, std::move(real));
  return datum.is_validated() ? validated(std::move(sub)) : sub;
}

Matrix classical_form(const CoxeterDatum& datum) {
  const Field& field = datum.field();
  const std::size_t n = datum.rank();
  Matrix c(n, n, field.zero());
  for (std::size_t s = 0; s < n; ++s) {
    c(s, s) = field.one();
    for (std::size_t t = s + 1; t < n; ++t) {
      const Scalar root = field.sqrt(datum.pairing(s, t) * datum.pairing(t, s));
      c(s, t) = -root;
      c(t, s) = -root;
    }
  }
  return c;
}

CoxeterDatum classical_datum(const CoxeterDatum& datum) {
  return validated(CoxeterDatum(datum.generators(), classical_form(datum), datum.field()));
}

namespace {

Matrix exact_matrix(const std::vector<std::vector<mpq_class>>& rows) {
  std::vector<Vec> out;
  for (const auto& r : rows) {
    Vec v;
    for (const auto& q : r) v.emplace_back(q);
    out.push_back(std::move(v));
  }
  return Matrix::from_rows(out);
}

CoxeterDatum dihedral(long m) {
  if (m < 2) throw Error(ErrorKind::UnknownExample, "dihedral examples need m >= 2");
  const std::vector<std::string> gens{"r", "s"};
  switch (m) {
    case 2: return validated({gens, exact_matrix({{1, 0}, {0, 1}}), Field::exact()});
    case 3: return validated({gens, exact_matrix({{1, mpq_class(-1, 2)}, {mpq_class(-1, 2), 1}}), Field::exact()});
    case 4: return validated({gens, exact_matrix({{1, -1}, {mpq_class(-1, 2), 1}}), Field::exact()});
    case 6: return validated({gens, exact_matrix({{1, -1}, {mpq_class(-3, 4), 1}}), Field::exact()});
    default: break;
  }
  const double c = -std::cos(std::numbers::pi / static_cast<double>(m));
  Matrix a = Matrix::from_rows({{Scalar(1.0), Scalar(c)}, {Scalar(c), Scalar(1.0)}});
  return validated({gens, std::move(a), Field::floating()});
}

CoxeterDatum infinite_gamma(const mpq_class& gamma) {
  if (gamma < 1) throw Error(ErrorKind::UnknownExample, "infinite-gamma needs gamma >= 1");
  const mpq_class g = -gamma;
  return validated({{"r", "s"}, exact_matrix({{1, g}, {g, 1}}), Field::exact()});
}

}  // namespace

CoxeterDatum builtin_example(std::string_view name) {
  if (name == "paper-triangle") {
    using q = mpq_class;
    return validated({{"r", "s", "t"},
                      exact_matrix({{1, q(-1, 4), q(-5, 2)}, {-1, 1, q(-1, 6)}, {q(-1, 10), q(-3, 2), 1}}),
                      Field::exact()});
  }
  constexpr std::string_view dihedral_prefix = "dihedral-";
  if (name.starts_with(dihedral_prefix)) {
    const std::string digits(name.substr(dihedral_prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(ErrorKind::UnknownExample, "bad dihedral example '" + std::string(name) + "'");
    }
    return dihedral(std::stol(digits));
  }
  constexpr std::string_view gamma_prefix = "infinite-gamma";
  if (name.starts_with(gamma_prefix)) {
    std::string rest(name.substr(gamma_prefix.size()));
    if (rest.empty()) return infinite_gamma(2);
    if (rest.front() == '-') {
      rest = rest.substr(1);
    } else if (rest.front() == '(' && rest.back() == ')') {
      rest = rest.substr(1, rest.size() - 2);
      const auto eq = rest.find('=');
      if (eq != std::string::npos) rest = rest.substr(eq + 1);
    } else {
      throw Error(ErrorKind::UnknownExample, "bad infinite-gamma example '" + std::string(name) + "'");
    }
    try {
      return infinite_gamma(parse_rational(rest));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Parse) {
        throw Error(ErrorKind::UnknownExample, "bad gamma in '" + std::string(name) + "'");
      }
      throw;
    }
  }
  throw Error(ErrorKind::UnknownExample, "unknown example '" + std::string(name) + "'");
}

std::vector<std::string> builtin_example_names() {
  return {"paper-triangle", "dihedral-<m>", "infinite-gamma-<gamma>"};
}

}  // namespace coxdatum
