#pragma once

#include "algebra/rational.hpp"

namespace algebra {

/// Exact 3-vector over rationals; with + and the cross product these form a
/// Lie ring (u x u = 0, Jacobi identity).
struct Vec3Q {
  Rational x, y, z;

  friend Vec3Q operator+(const Vec3Q& u, const Vec3Q& v) {
    return {u.x + v.x, u.y + v.y, u.z + v.z};
  }
  friend Vec3Q operator-(const Vec3Q& u, const Vec3Q& v) {
    return {u.x - v.x, u.y - v.y, u.z - v.z};
  }
  Vec3Q operator-() const { return {-x, -y, -z}; }
  friend bool operator==(const Vec3Q& u, const Vec3Q& v) = default;
};

inline Vec3Q cross(const Vec3Q& u, const Vec3Q& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

}  // namespace algebra
