#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace algebra {

using BigInt = boost::multiprecision::cpp_int;

/// Reduced fraction over arbitrary-precision integers.
///
/// Invariants: denominator > 0, gcd(|num|, den) == 1, zero is 0/1.
/// The sign lives in the numerator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}          // NOLINT(google-explicit-constructor)
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt num, BigInt den);              // normalizes; throws on zero denominator

  /// Parses "num", "num/den" or "-num/den". Throws std::invalid_argument otherwise.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

  Rational operator-() const;
  Rational& operator+=(const Rational& r) { return *this = *this + r; }
  Rational& operator-=(const Rational& r) { return *this = *this - r; }
  Rational& operator*=(const Rational& r) { return *this = *this * r; }
  Rational& operator/=(const Rational& r) { return *this = *this / r; }

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational reciprocal() const;  // throws on zero
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  /// "num/den", the denominator omitted when it is 1.
  std::string str() const;
  double to_double() const;

private:
  BigInt num_;
  BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Nonnegative rational square root of q, when q is the square of a rational
/// (numerator and denominator of the reduced form are both perfect integer
/// squares); empty otherwise, in particular for every negative q.
std::optional<Rational> sqrt_exact(const Rational& q);

}  // namespace algebra
