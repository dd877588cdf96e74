#include "algebra/rational.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace algebra {

namespace mp = boost::multiprecision;

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::domain_error("zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = mp::gcd(mp::abs(num_), den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("invalid rational '" + std::string(text) + "'"); };
  std::string_view s = text;
  auto read_int = [&](std::string_view part) -> BigInt {
    if (part.empty()) throw bad();
    bool negative = part[0] == '-';
    if (part[0] == '+' || part[0] == '-') part.remove_prefix(1);  // cpp_int rejects a leading '+'
    if (part.empty()) throw bad();
    for (char c : part)
      if (c < '0' || c > '9') throw bad();
    BigInt v{std::string(part)};
    return negative ? -v : v;
  };
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(read_int(s));
  return Rational(read_int(s.substr(0, slash)), read_int(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + a.den_ * b.num_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - a.den_ * b.num_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("rational division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("rational division by zero");
  return Rational(den_, num_);
}

std::string Rational::str() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

double Rational::to_double() const {
  return mp::cpp_rational(num_, den_).convert_to<double>();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

std::optional<Rational> sqrt_exact(const Rational& q) {
  if (q.sign() < 0) return std::nullopt;
  BigInt sn = mp::sqrt(q.num());
  if (sn * sn != q.num()) return std::nullopt;
  BigInt sd = mp::sqrt(q.den());
  if (sd * sd != q.den()) return std::nullopt;
  return Rational(sn, sd);
}

}  // namespace algebra
