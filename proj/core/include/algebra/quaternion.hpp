#pragma once

#include "algebra/rational.hpp"

namespace algebra {

/// Exact quaternion a + b*i + c*j + d*k over rationals, with the basis law
/// i*j = k, j*k = i, k*i = j, j*i = -k, k*j = -i, i*k = -j, i*i = j*j = k*k = -1.
struct Quaternion {
  Rational a, b, c, d;

  Quaternion() = default;
  Quaternion(Rational a_, Rational b_, Rational c_, Rational d_)
      : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

  static Quaternion one() { return {1, 0, 0, 0}; }
  static Quaternion i() { return {0, 1, 0, 0}; }
  static Quaternion j() { return {0, 0, 1, 0}; }
  static Quaternion k() { return {0, 0, 0, 1}; }

  bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }
  Rational norm() const { return a * a + b * b + c * c + d * d; }
  Quaternion conjugate() const { return {a, -b, -c, -d}; }

  /// Conjugate over norm; q * inverse() == inverse() * q == 1 exactly.
  Quaternion inverse() const;

  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) {
    return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
  }
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) {
    return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
  }
  Quaternion operator-() const { return {-a, -b, -c, -d}; }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q);
  friend bool operator==(const Quaternion& p, const Quaternion& q) = default;
};

}  // namespace algebra
