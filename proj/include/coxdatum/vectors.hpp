#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "coxdatum/linalg.hpp"

namespace coxdatum {

/// Which of the two paired spaces a vector or action lives in.
enum class Side { One, Two };

inline Side other(Side side) { return side == Side::One ? Side::Two : Side::One; }
inline int side_number(Side side) { return side == Side::One ? 1 : 2; }
Side side_from_number(int number);

/// Coordinates over the free basis alpha'_s (Side::One) or beta'_s (Side::Two).
struct FreeCoeffVector {
  Side side = Side::One;
  Vec coeffs;
};

enum class VectorSign { Positive, Negative, Zero, Mixed };

std::string_view to_string(VectorSign sign);

/// All coefficients >= 0 with one > 0 is Positive (float: > -eps and > eps).
VectorSign classify(const Vec& v, const Field& field);
bool has_negative_entry(const Vec& v, const Field& field);

/// Indices with a nonzero coefficient.
std::vector<std::size_t> support(const Vec& v, const Field& field);

/// Index s when v is a nonzero multiple of the s-th basis vector.
std::ptrdiff_t single_support(const Vec& v, const Field& field);

/// Line through a nonzero vector, normalized so the largest absolute
/// coefficient is 1 and the first nonzero coefficient is positive. Two
/// vectors share a RayId exactly when one is a nonzero multiple of the other.
class RayId {
 public:
  RayId() = default;
  RayId(const Vec& v, const Field& field);

  const Vec& direction() const { return direction_; }
  const std::string& key() const { return key_; }

  friend bool operator==(const RayId& a, const RayId& b) { return a.key_ == b.key_; }
  friend auto operator<=>(const RayId& a, const RayId& b) { return a.key_ <=> b.key_; }

 private:
  Vec direction_;
  std::string key_;
};

/// The scalar c with v = c * direction(ray(v)).
Scalar scale_on_ray(const Vec& v, const RayId& ray, const Field& field);

}  // namespace coxdatum
