#include "algebra/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace algebra {

namespace {

constexpr double kPi = std::numbers::pi;

Complex flush_zero(Complex z) {
  double re = z.real() == 0.0 ? 0.0 : z.real();
  double im = z.imag() == 0.0 ? 0.0 : z.imag();
  return {re, im};
}

void sort_roots(std::vector<Complex>& roots) {
  for (Complex& r : roots) r = flush_zero(r);
  std::sort(roots.begin(), roots.end(), root_less);
}

}  // namespace

bool root_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

Complex solve_linear(Complex alpha, Complex beta) {
  if (alpha == Complex{})
    throw std::domain_error("degenerate: not a 1st degree equation");
  return flush_zero(-beta / alpha);
}

QuadraticSolution solve_quadratic(Complex alpha, Complex beta, Complex gamma) {
  if (alpha == Complex{}) throw std::domain_error("degenerate: not a 2nd degree equation");
  Complex p = beta / alpha;
  Complex q = gamma / alpha;
  Complex s = sqrt_principal(p * p / 4.0 - q);
  Complex half = -p / 2.0;
  double scale = 1.0 + std::abs(beta * beta) + 4.0 * std::abs(alpha) * std::abs(gamma);
  bool perfect = std::abs(beta * beta - 4.0 * alpha * gamma) <= 1e-9 * scale;
  QuadraticSolution sol{{flush_zero(half + s), flush_zero(half - s)}, perfect};
  return sol;
}

DepressedCubic depress_cubic(Complex alpha, Complex beta, Complex gamma, Complex delta) {
  if (alpha == Complex{}) throw std::domain_error("degenerate: not a 3rd degree equation");
  Complex b = beta / alpha;
  Complex c = gamma / alpha;
  Complex d = delta / alpha;
  DepressedCubic out;
  out.shift = b / 3.0;
  out.p = c - b * b / 3.0;
  out.q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;
  return out;
}

CubicSolution solve_cubic_full(Complex alpha, Complex beta, Complex gamma, Complex delta) {
  CubicSolution sol;
  sol.reduced = depress_cubic(alpha, beta, gamma, delta);
  const Complex p = sol.reduced.p;
  const Complex q = sol.reduced.q;

  // u^3, v^3 solve the auxiliary quadratic w^2 + q*w - p^3/27 = 0. Taking the
  // larger-magnitude branch for u^3 avoids cancellation when the square root
  // nearly equals q/2.
  Complex disc = sqrt_principal(q * q / 4.0 + p * p * p / 27.0);
  Complex u3_plus = -q / 2.0 + disc;
  Complex u3_minus = -q / 2.0 - disc;
  Complex u3 = std::abs(u3_plus) >= std::abs(u3_minus) ? u3_plus : u3_minus;

  if (std::abs(u3) == 0.0) {
    // p = q = 0: triple root of the reduced equation at 0
    for (int k = 0; k < 3; ++k) {
      sol.pairs[static_cast<std::size_t>(k)] = {Complex{}, Complex{}};
      sol.roots[static_cast<std::size_t>(k)] = flush_zero(-sol.reduced.shift);
    }
    return sol;
  }

  Complex u0 = cbrt_principal(u3);
  const Complex omega{std::cos(2.0 * kPi / 3.0), std::sin(2.0 * kPi / 3.0)};
  Complex u = u0;
  for (int k = 0; k < 3; ++k, u *= omega) {
    Complex v = (std::abs(p) == 0.0) ? Complex{} : -p / (3.0 * u);
    sol.pairs[static_cast<std::size_t>(k)] = {u, v};
    sol.roots[static_cast<std::size_t>(k)] = flush_zero(u + v - sol.reduced.shift);
  }
  return sol;
}

std::vector<Complex> solve_cubic(Complex alpha, Complex beta, Complex gamma, Complex delta) {
  CubicSolution sol = solve_cubic_full(alpha, beta, gamma, delta);
  std::vector<Complex> roots(sol.roots.begin(), sol.roots.end());
  sort_roots(roots);
  return roots;
}

std::vector<Complex> solve_quartic(Complex alpha, Complex beta, Complex gamma, Complex delta,
                                   Complex epsilon, QuarticWork* work) {
  if (alpha == Complex{}) throw std::domain_error("degenerate: not a 4th degree equation");
  Complex b = beta / alpha;
  Complex c = gamma / alpha;
  Complex d = delta / alpha;
  Complex e = epsilon / alpha;

  QuarticWork w;
  w.shift = b / 4.0;
  w.p = c - 3.0 * b * b / 8.0;
  w.q = d - b * c / 2.0 + b * b * b / 8.0;
  w.r = e - b * d / 4.0 + b * b * c / 16.0 - 3.0 * b * b * b * b / 256.0;

  std::vector<Complex> reduced_roots;
  double scale = 1.0 + std::max({std::abs(w.p), std::abs(w.q), std::abs(w.r)});
  if (std::abs(w.q) <= 1e-12 * scale) {
    // Biquadratic: a resolvent root would vanish with q, so substitute y = z^2.
    w.biquadratic = true;
    QuadraticSolution ys = solve_quadratic(1.0, w.p, w.r);
    for (Complex y : ys.roots) {
      Complex s = sqrt_principal(y);
      reduced_roots.push_back(s);
      reduced_roots.push_back(-s);
    }
  } else {
    // Resolvent cubic q^2 = 4 * 2w * (w^2 + p*w + p^2/4 - r), expanded.
    std::vector<Complex> ws =
        solve_cubic(8.0, 8.0 * w.p, 2.0 * w.p * w.p - 8.0 * w.r, -w.q * w.q);
    w.w0 = *std::max_element(ws.begin(), ws.end(),
                             [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
    w.zeta = sqrt_principal(2.0 * w.w0);
    w.eta = -w.q / (2.0 * w.zeta);
    // z^2 + p/2 + w0 = +-(zeta*z + eta)
    for (double sign : {+1.0, -1.0}) {
      QuadraticSolution qs =
          solve_quadratic(1.0, -sign * w.zeta, w.p / 2.0 + w.w0 - sign * w.eta);
      reduced_roots.push_back(qs.roots[0]);
      reduced_roots.push_back(qs.roots[1]);
    }
  }

  std::vector<Complex> roots;
  roots.reserve(4);
  for (Complex z : reduced_roots) roots.push_back(z - w.shift);
  sort_roots(roots);
  if (work) *work = w;
  return roots;
}

std::vector<Complex> solve_binomial(Complex c, int n) { return nth_roots(c, n); }

RootCheck verify_roots(const Poly& poly, const std::vector<Complex>& roots) {
  if (static_cast<int>(roots.size()) != poly.degree())
    throw std::invalid_argument("root count does not match the degree");
  RootCheck check{0.0, true};
  for (Complex r : roots) check.max_residual = std::max(check.max_residual, std::abs(poly.eval(r)));

  // Viete: expanding prod (z - r_i) must reproduce the monic coefficients.
  Poly expanded = Poly::from_roots(roots);
  for (int i = 0; i <= poly.degree(); ++i) {
    Complex monic = poly.coeff(static_cast<std::size_t>(i)) / poly.leading();
    Complex got = expanded.coeff(static_cast<std::size_t>(i));
    if (std::abs(got - monic) > 1e-7 * (1.0 + std::abs(monic))) {
      check.viete_ok = false;
      break;
    }
  }
  return check;
}

double bisect_real_root(const Poly& poly, double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  double flo = poly.eval_real(lo);
  double fhi = poly.eval_real(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0))
    throw std::domain_error("no sign change on the bracketing interval");
  double tol = 1e-12 * std::max({1.0, std::abs(lo), std::abs(hi)});
  for (int iter = 0; iter < 200 && (hi - lo) > tol; ++iter) {
    double mid = lo + (hi - lo) / 2.0;
    double fmid = poly.eval_real(mid);
    if (fmid == 0.0) return mid;
    if ((fmid < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return lo + (hi - lo) / 2.0;
}

}  // namespace algebra
