#pragma once

#include <array>
#include <vector>

#include "algebra/poly.hpp"

namespace algebra {

/// Root of alpha*z + beta = 0; throws when alpha == 0 ("not an equation").
Complex solve_linear(Complex alpha, Complex beta);

struct QuadraticSolution {
  std::array<Complex, 2> roots;  // -p/2 + s first, then -p/2 - s
  bool perfect_square;           // beta^2 = 4*alpha*gamma within tolerance
};

/// Both roots of alpha*z^2 + beta*z + gamma = 0 through the reduced form
/// z = -p/2 +- sqrt(p^2/4 - q) with the principal square-root branch.
QuadraticSolution solve_quadratic(Complex alpha, Complex beta, Complex gamma);

/// Reduced cubic data: substituting z = w - shift into the monic cubic gives
/// w^3 + p*w + q, with shift = beta/(3*alpha).
struct DepressedCubic {
  Complex p;
  Complex q;
  Complex shift;
};

DepressedCubic depress_cubic(Complex alpha, Complex beta, Complex gamma, Complex delta);

struct CardanoPair {
  Complex u;
  Complex v;  // paired so that u*v = -p/3
};

struct CubicSolution {
  std::array<Complex, 3> roots;        // of the original equation, unsorted
  std::array<CardanoPair, 3> pairs;    // the (u, v) behind each root
  DepressedCubic reduced;
};

/// All three roots (with multiplicity) by the u + v substitution: u^3 and v^3
/// solve w^2 + q*w - p^3/27 = 0; u^3 takes the larger-magnitude branch and
/// each cube-root choice of u is paired with v = -p/(3u).
CubicSolution solve_cubic_full(Complex alpha, Complex beta, Complex gamma, Complex delta);
/// The roots only, sorted by (re, im).
std::vector<Complex> solve_cubic(Complex alpha, Complex beta, Complex gamma, Complex delta);

/// Intermediates of the quartic split (z^2 + p/2 + w0)^2 = (zeta*z + eta)^2.
struct QuarticWork {
  Complex p, q, r;
  Complex shift;  // beta/(4*alpha)
  bool biquadratic = false;
  Complex w0, zeta, eta;  // unset on the biquadratic path
};

/// All four roots (with multiplicity), sorted by (re, im). When q of the
/// reduced form vanishes the equation is solved as a biquadratic; otherwise
/// a nonzero root of the resolvent cubic
/// q^2 = 4 * 2w * (w^2 + p*w + p^2/4 - r) drives the two quadratics.
std::vector<Complex> solve_quartic(Complex alpha, Complex beta, Complex gamma, Complex delta,
                                   Complex epsilon, QuarticWork* work = nullptr);

/// All n solutions of z^n = c (k = 0..n-1 order).
std::vector<Complex> solve_binomial(Complex c, int n);

struct RootCheck {
  double max_residual;  // max |poly(root)|
  bool viete_ok;        // elementary symmetric sums match the coefficients
};

/// Residual and Viete verification; root count must equal the degree.
RootCheck verify_roots(const Poly& poly, const std::vector<Complex>& roots);

/// Bisection root of a real-coefficient polynomial on [lo, hi]; requires a
/// sign change.
double bisect_real_root(const Poly& poly, double lo, double hi);

/// Comparison used everywhere roots are ordered deterministically.
bool root_less(Complex a, Complex b);

}  // namespace algebra
