#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

namespace coxdatum {

enum class Mode { Exact, Float };

/// A real number held either as an exact rational or as a double.
///
/// Arithmetic between an exact and a float operand throws ModeMismatch: a
/// datum picks one backend and every derived quantity stays in it. Sign and
/// tolerance decisions are not made here; they belong to Field, which knows
/// the datum-wide epsilon.
class Scalar {
 public:
  Scalar() : value_(mpq_class(0)) {}
  explicit Scalar(mpq_class q);
  explicit Scalar(double x) : value_(x) {}

  Mode mode() const { return value_.index() == 0 ? Mode::Exact : Mode::Float; }
  bool is_exact() const { return value_.index() == 0; }

  const mpq_class& rational() const;
  double to_double() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Representation equality: exact values compare exactly, floats compare
  /// bitwise. Use Field::equal for tolerance-aware comparison.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "p/q" (or "p" for integers) in exact mode, shortest round-trip decimal
  /// otherwise.
  std::string to_string() const;

 private:
  std::variant<mpq_class, double> value_;
};

/// Parse "p/q", "p", or a decimal literal into an exact rational.
mpq_class parse_rational(std::string_view text);

/// Arithmetic context shared by everything derived from one datum.
class Field {
 public:
  static constexpr double kDefaultEpsilon = 1e-9;

  static Field exact() { return Field(Mode::Exact, 0.0); }
  static Field floating(double epsilon = kDefaultEpsilon);

  Mode mode() const { return mode_; }
  double epsilon() const { return epsilon_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long value) const;
  Scalar from_ratio(long num, long den) const;
  Scalar from_double(double value) const;
  Scalar parse(std::string_view text) const;

  /// -1, 0 or +1. In float mode |x| <= epsilon counts as zero.
  int sign(const Scalar& x) const;
  bool is_zero(const Scalar& x) const { return sign(x) == 0; }
  bool equal(const Scalar& a, const Scalar& b) const { return sign(a - b) == 0; }
  bool less(const Scalar& a, const Scalar& b) const { return sign(a - b) < 0; }

  /// Nonnegative square root. Exact mode succeeds only for perfect rational
  /// squares and throws ExactSqrtUnavailable otherwise.
  Scalar sqrt(const Scalar& x) const;

  /// Throws ModeMismatch when x does not belong to this field.
  void check(const Scalar& x) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(Mode mode, double epsilon) : mode_(mode), epsilon_(epsilon) {}

  Mode mode_;
  double epsilon_;
};

}  // namespace coxdatum
