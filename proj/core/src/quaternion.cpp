#include "algebra/quaternion.hpp"

#include <stdexcept>

namespace algebra {

Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.a * q.a - p.b * q.b - p.c * q.c - p.d * q.d,
          p.a * q.b + p.b * q.a + p.c * q.d - p.d * q.c,
          p.a * q.c - p.b * q.d + p.c * q.a + p.d * q.b,
          p.a * q.d + p.b * q.c - p.c * q.b + p.d * q.a};
}

Quaternion Quaternion::inverse() const {
  if (is_zero()) throw std::domain_error("zero has no inverse");
  Rational n = norm();
  return {a / n, -b / n, -c / n, -d / n};
}

}  // namespace algebra
