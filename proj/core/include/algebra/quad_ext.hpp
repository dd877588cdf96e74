#pragma once

#include <string>
#include <string_view>
#include <utility>

#include "algebra/rational.hpp"

namespace algebra {

/// Element x + y*sqrt(d) of a quadratic extension of Q, stored as the exact
/// pair (x, y); the representation is unique componentwise.
struct QuadExtElem {
  Rational x;
  Rational y;

  bool is_zero() const { return x.is_zero() && y.is_zero(); }
  friend bool operator==(const QuadExtElem& a, const QuadExtElem& b) = default;
};

/// The field Q(sqrt(d)) of pairs (x, y) = x + y*sqrt(d) for a rational d that
/// is not the square of a rational (this guarantees a^2 - d*b^2 != 0 for
/// nonzero (a, b), so every nonzero element is invertible). Negative d is
/// allowed; d = -1 gives the Gaussian rationals.
class ExtensionField {
public:
  explicit ExtensionField(Rational d);

  const Rational& d() const { return d_; }

  QuadExtElem add(const QuadExtElem& a, const QuadExtElem& b) const;
  QuadExtElem sub(const QuadExtElem& a, const QuadExtElem& b) const;
  /// (x1, y1)(x2, y2) = (x1 x2 + d y1 y2, x1 y2 + y1 x2).
  QuadExtElem mul(const QuadExtElem& a, const QuadExtElem& b) const;
  /// (a, b)^-1 = (a / (a^2 - d b^2), -b / (a^2 - d b^2)); throws on zero.
  QuadExtElem inverse(const QuadExtElem& a) const;

  static QuadExtElem one() { return {1, 0}; }
  static QuadExtElem zero() { return {0, 0}; }

  /// The two solutions of (x, y)^2 = (d, 0), namely (0, 1) and (0, -1).
  std::pair<QuadExtElem, QuadExtElem> solve_sqrt() const;

  /// "x+y*sqrt(d)" with rational components; "x" or "y*sqrt(d)" when a part
  /// vanishes.
  std::string format(const QuadExtElem& a) const;
  /// Accepts the format above plus shorthands like "sqrt(2)", "-sqrt(2)",
  /// "3/7-5*sqrt(2)"; whitespace is ignored. The radicand must equal d.
  QuadExtElem parse(std::string_view text) const;

private:
  Rational d_;
};

/// The conjugation automorphism (x, y) -> (x, -y); it fixes the base field
/// and swaps the two square roots of d.
inline QuadExtElem conjugate(const QuadExtElem& a) { return {a.x, -a.y}; }

}  // namespace algebra
