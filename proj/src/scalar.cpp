#include "coxdatum/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>

#include "coxdatum/errors.hpp"

namespace coxdatum {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
    case ErrorKind::InvalidDatum: return "InvalidDatum";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::UnknownExample: return "UnknownExample";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::ExactSqrtUnavailable: return "ExactSqrtUnavailable";
    case ErrorKind::ExactUnavailable: return "ExactUnavailable";
    case ErrorKind::MixedSignVector: return "MixedSignVector";
    case ErrorKind::DescentInconsistency: return "DescentInconsistency";
    case ErrorKind::DuplicateRay: return "DuplicateRay";
    case ErrorKind::InfiniteBond: return "InfiniteBond";
    case ErrorKind::NoDescentAvailable: return "NoDescentAvailable";
    case ErrorKind::StepCapExceeded: return "StepCapExceeded";
    case ErrorKind::NoRealization: return "NoRealization";
    case ErrorKind::SpanCondition: return "SpanCondition";
    case ErrorKind::NotRank2: return "NotRank2";
    case ErrorKind::Uncertified: return "Uncertified";
    case ErrorKind::Precondition: return "Precondition";
    case ErrorKind::Undetermined: return "Undetermined";
  }
  return "Unknown";
}

namespace {

[[noreturn]] void mismatch() {
  throw Error(ErrorKind::ModeMismatch, "exact and float scalars cannot be mixed");
}

}  // namespace

Scalar::Scalar(mpq_class q) : value_(std::move(q)) {
  std::get<mpq_class>(value_).canonicalize();
}

const mpq_class& Scalar::rational() const {
  if (!is_exact()) mismatch();
  return std::get<mpq_class>(value_);
}

double Scalar::to_double() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_d();
  return std::get<double>(value_);
}

Scalar Scalar::operator-() const {
  if (is_exact()) return Scalar(mpq_class(-std::get<mpq_class>(value_)));
  return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (value_.index() != rhs.value_.index()) mismatch();
  if (is_exact()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) += std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  if (value_.index() != rhs.value_.index()) mismatch();
  if (is_exact()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) -= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  if (value_.index() != rhs.value_.index()) mismatch();
  if (is_exact()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(rhs.value_);
  } else {
    std::get<double>(value_) *= std::get<double>(rhs.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (value_.index() != rhs.value_.index()) mismatch();
  if (is_exact()) {
    const auto& d = std::get<mpq_class>(rhs.value_);
    if (sgn(d) == 0) throw Error(ErrorKind::Precondition, "division by zero");
    std::get<mpq_class>(value_) /= d;
  } else {
    std::get<double>(value_) /= std::get<double>(rhs.value_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (a.is_exact()) return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
  return std::get<double>(a.value_) == std::get<double>(b.value_);
}

std::string Scalar::to_string() const {
  if (is_exact()) return std::get<mpq_class>(value_).get_str();
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, std::get<double>(value_));
  return std::string(buf, res.ptr);
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw Error(ErrorKind::Parse, "empty rational literal");

  auto bad = [&]() -> Error {
    return Error(ErrorKind::Parse, "bad rational literal '" + std::string(text) + "'");
  };

  if (s.find_first_of(".eE") != std::string::npos) {
    // Decimal literal: read it as an exact decimal fraction, not via double.
    std::size_t epos = s.find_first_of("eE");
    std::string mant = s.substr(0, epos);
    long exponent = 0;
    if (epos != std::string::npos) {
      const std::string es = s.substr(epos + 1);
      auto r = std::from_chars(es.data(), es.data() + es.size(), exponent);
      if (es.empty() || r.ec != std::errc() || r.ptr != es.data() + es.size()) throw bad();
    }
    bool negative = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
      negative = mant[0] == '-';
      mant = mant.substr(1);
    }
    const std::size_t dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
      digits = mant.substr(0, dot) + mant.substr(dot + 1);
      exponent -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) throw bad();
    mpz_class num(digits, 10);
    if (negative) num = -num;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exponent)));
    mpq_class q = exponent >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
    q.canonicalize();
    return q;
  }

  const std::size_t slash = s.find('/');
  auto valid_int = [](const std::string& p) {
    std::size_t i = (!p.empty() && (p[0] == '-' || p[0] == '+')) ? 1 : 0;
    return i < p.size() && p.find_first_not_of("0123456789", i) == std::string::npos;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw bad();
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  mpz_class d(den, 10);
  if (d == 0) throw bad();
  mpq_class q(mpz_class(num, 10), d);
  q.canonicalize();
  return q;
}

Field Field::floating(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::Precondition, "epsilon must be a positive finite number");
  }
  return Field(Mode::Float, epsilon);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long value) const {
  if (mode_ == Mode::Exact) return Scalar(mpq_class(value));
  return Scalar(static_cast<double>(value));
}

Scalar Field::from_ratio(long num, long den) const {
  if (den == 0) throw Error(ErrorKind::Precondition, "zero denominator");
  if (mode_ == Mode::Exact) return Scalar(mpq_class(num, den));
  return Scalar(static_cast<double>(num) / static_cast<double>(den));
}

Scalar Field::from_double(double value) const {
  if (mode_ == Mode::Exact) return Scalar(mpq_class(value));
  return Scalar(value);
}

Scalar Field::parse(std::string_view text) const {
  const mpq_class q = parse_rational(text);
  if (mode_ == Mode::Exact) return Scalar(q);
  return Scalar(q.get_d());
}

int Field::sign(const Scalar& x) const {
  check(x);
  if (mode_ == Mode::Exact) return sgn(x.rational());
  const double v = x.to_double();
  if (v > epsilon_) return 1;
  if (v < -epsilon_) return -1;
  return 0;
}

Scalar Field::sqrt(const Scalar& x) const {
  check(x);
  if (sign(x) < 0) throw Error(ErrorKind::Precondition, "square root of a negative value");
  if (mode_ == Mode::Float) return Scalar(std::sqrt(std::max(0.0, x.to_double())));
  const mpq_class& q = x.rational();
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
    throw Error(ErrorKind::ExactSqrtUnavailable,
                "sqrt(" + q.get_str() + ") is not rational; rerun in float mode");
  }
  mpz_class num, den;
  mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
  return Scalar(mpq_class(num, den));
}

void Field::check(const Scalar& x) const {
  if (x.mode() != mode_) mismatch();
}

}  // namespace coxdatum
