#include "algebra/complex_utils.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

namespace algebra {

namespace {
constexpr double kPi = std::numbers::pi;

double radius_root(double modulus, int n) {
  switch (n) {
    case 1: return modulus;
    case 2: return std::sqrt(modulus);
    case 3: return std::cbrt(modulus);
    default: return std::pow(modulus, 1.0 / n);
  }
}
}  // namespace

Polar to_polar(Complex z) {
  if (z.real() == 0.0 && z.imag() == 0.0) return {0.0, 0.0};
  double arg = std::atan2(z.imag(), z.real());
  if (arg <= -kPi) arg = kPi;  // atan2 may yield -pi; the principal branch is (-pi, pi]
  return {std::hypot(z.real(), z.imag()), arg};
}

std::vector<Complex> nth_roots(Complex c, int n) {
  if (n < 1) throw std::invalid_argument("nth_roots: n must be positive");
  Polar p = to_polar(c);
  std::vector<Complex> roots;
  roots.reserve(static_cast<std::size_t>(n));
  if (p.modulus == 0.0) {
    roots.assign(static_cast<std::size_t>(n), Complex(0.0, 0.0));
    return roots;
  }
  double r = radius_root(p.modulus, n);
  for (int k = 0; k < n; ++k) {
    double angle = (p.argument + 2.0 * kPi * k) / n;
    roots.emplace_back(r * std::cos(angle), r * std::sin(angle));
  }
  return roots;
}

Complex sqrt_principal(Complex c) {
  Polar p = to_polar(c);
  if (p.modulus == 0.0) return {0.0, 0.0};
  double r = std::sqrt(p.modulus);
  return {r * std::cos(p.argument / 2), r * std::sin(p.argument / 2)};
}

Complex cbrt_principal(Complex c) {
  Polar p = to_polar(c);
  if (p.modulus == 0.0) return {0.0, 0.0};
  double r = std::cbrt(p.modulus);
  return {r * std::cos(p.argument / 3), r * std::sin(p.argument / 3)};
}

std::string format_double(double x) {
  if (x == 0.0) x = 0.0;  // flush -0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12f", x);
  std::string s(buf);
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    auto last = s.find_last_not_of('0');
    s.erase(last == dot ? dot : last + 1);
  }
  if (s == "-0") s = "0";
  return s;
}

std::string format_complex(Complex z) {
  std::string re = format_double(z.real());
  std::string im = format_double(z.imag());
  if (im == "0") return re;  // covers tiny imaginary parts that round away
  bool negative = im[0] == '-';
  return re + (negative ? "-" : "+") + (negative ? im.substr(1) : im) + "i";
}

Complex parse_complex(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("invalid complex '" + std::string(text) + "'"); };
  std::string s;
  for (char c : text)
    if (c != ' ') s += c;
  if (s.empty()) throw bad();

  auto read_real = [&](std::string_view part) -> double {
    if (part.empty() || part == "+") return 1.0;
    if (part == "-") return -1.0;
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(std::string(part), &pos);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos != part.size() || !std::isfinite(v)) throw bad();
    return v;
  };

  if (s.back() != 'i') return {read_real(s), 0.0};

  std::string_view body(s.data(), s.size() - 1);
  // Split at the last '+'/'-' that is not a leading sign and not an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    char c = body[k];
    if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, read_real(body)};
  return {read_real(body.substr(0, split)), read_real(body.substr(split))};
}

}  // namespace algebra
