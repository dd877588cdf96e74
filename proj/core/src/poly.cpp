#include "algebra/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace algebra {

Poly::Poly(std::vector<Complex> ascending) : coeffs_(std::move(ascending)) {
  if (coeffs_.empty()) coeffs_.push_back(Complex{});
  while (coeffs_.size() > 1 && coeffs_.back() == Complex{}) coeffs_.pop_back();
}

Poly Poly::from_roots(std::span<const Complex> roots, Complex leading) {
  std::vector<Complex> c{leading};  // ascending; multiply by (z - r) per root
  for (Complex r : roots) {
    c.push_back(Complex{});
    for (std::size_t i = c.size() - 1; i > 0; --i) c[i] = c[i - 1] - r * c[i];
    c[0] = -r * c[0];
  }
  return Poly(std::move(c));
}

Complex Poly::eval(Complex z) const {
  Complex acc{};
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
  return acc;
}

double Poly::eval_real(double x) const {
  double acc = 0.0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i].real();
  return acc;
}

bool Poly::has_real_coeffs(double eps) const {
  for (Complex c : coeffs_)
    if (std::abs(c.imag()) > eps) return false;
  return true;
}

}  // namespace algebra
