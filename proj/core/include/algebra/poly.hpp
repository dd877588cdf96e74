#pragma once

#include <span>
#include <vector>

#include "algebra/complex_utils.hpp"

namespace algebra {

/// Dense polynomial over complex doubles, coefficients in ascending degree.
/// Exact trailing zeros are trimmed; the zero polynomial keeps one zero
/// coefficient and reports degree 0.
class Poly {
public:
  Poly() : coeffs_{Complex{}} {}
  explicit Poly(std::vector<Complex> ascending);

  /// Monic-times-leading expansion of prod (z - r_i).
  static Poly from_roots(std::span<const Complex> roots, Complex leading = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Complex{}; }
  Complex leading() const { return coeffs_.back(); }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == Complex{}; }

  Complex eval(Complex z) const;       // Horner
  double eval_real(double x) const;    // real parts only; for real-coefficient use

  bool has_real_coeffs(double eps = 0.0) const;

private:
  std::vector<Complex> coeffs_;
};

}  // namespace algebra
