#include "coxdatum/vectors.hpp"

#include <cmath>

#include "coxdatum/errors.hpp"

namespace coxdatum {

Side side_from_number(int number) {
  if (number == 1) return Side::One;
  if (number == 2) return Side::Two;
  throw Error(ErrorKind::Precondition, "side must be 1 or 2");
}

std::string_view to_string(VectorSign sign) {
  switch (sign) {
    case VectorSign::Positive: return "positive";
    case VectorSign::Negative: return "negative";
    case VectorSign::Zero: return "zero";
    case VectorSign::Mixed: return "mixed";
  }
  return "mixed";
}

VectorSign classify(const Vec& v, const Field& field) {
  bool pos = false;
  bool neg = false;
  for (const Scalar& x : v) {
    const int s = field.sign(x);
    pos = pos || s > 0;
    neg = neg || s < 0;
  }
  if (pos && neg) return VectorSign::Mixed;
  if (pos) return VectorSign::Positive;
  if (neg) return VectorSign::Negative;
  return VectorSign::Zero;
}

bool has_negative_entry(const Vec& v, const Field& field) {
  for (const Scalar& x : v)
    if (field.sign(x) < 0) return true;
  return false;
}

std::vector<std::size_t> support(const Vec& v, const Field& field) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!field.is_zero(v[i])) out.push_back(i);
  return out;
}

std::ptrdiff_t single_support(const Vec& v, const Field& field) {
  const auto supp = support(v, field);
  return supp.size() == 1 ? static_cast<std::ptrdiff_t>(supp.front()) : -1;
}

RayId::RayId(const Vec& v, const Field& field) {
  std::size_t big = v.size();
  double best = 0.0;
  std::size_t first = v.size();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (field.is_zero(v[i])) continue;
    if (first == v.size()) first = i;
    // Exact mode compares magnitudes exactly so ties resolve the same way on
    // every platform.
    if (big == v.size()) {
      big = i;
      best = std::fabs(v[i].to_double());
      continue;
    }
    if (field.mode() == Mode::Exact) {
      if (abs(v[i].rational()) > abs(v[big].rational())) big = i;
    } else if (std::fabs(v[i].to_double()) > best) {
      big = i;
      best = std::fabs(v[i].to_double());
    }
  }
  if (big == v.size()) throw Error(ErrorKind::Precondition, "the zero vector has no ray");
  Scalar divisor = v[big];
  if (field.sign(divisor) < 0) divisor = -divisor;
  if (field.sign(v[first]) < 0) divisor = -divisor;
  direction_.reserve(v.size());
  for (const Scalar& x : v) direction_.push_back(x / divisor);
  key_ = vector_key(direction_, field);
}

Scalar scale_on_ray(const Vec& v, const RayId& ray, const Field& field) {
  const Vec& dir = ray.direction();
  for (std::size_t i = 0; i < dir.size(); ++i) {
    if (!field.is_zero(dir[i])) return v.at(i) / dir[i];
  }
  throw Error(ErrorKind::Precondition, "empty ray");
}

}  // namespace coxdatum
