#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

namespace algebra {

using Complex = std::complex<double>;

struct Polar {
  double modulus;
  double argument;  // principal angle in (-pi, pi]; 0 for z == 0
};

Polar to_polar(Complex z);

/// All n solutions of z^n = c, in the order k = 0..n-1 of
/// |c|^(1/n) * (cos((arg c + 2*pi*k)/n) + i sin(...)).
/// c == 0 yields n zeros. Throws for n < 1.
std::vector<Complex> nth_roots(Complex c, int n);

/// The k = 0 branch of the square / cube root set.
Complex sqrt_principal(Complex c);
Complex cbrt_principal(Complex c);

/// Fixed 12-digit text form with trailing zeros trimmed and "-0" normalized
/// to "0"; pure reals print without the imaginary part ("3", "5+3.8i", "5-3.8i").
std::string format_double(double x);
std::string format_complex(Complex z);

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i". Throws std::invalid_argument.
Complex parse_complex(std::string_view text);

}  // namespace algebra
