#include "algebra/classical.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace algebra {

namespace {

// Fills the complex pair from the exact "center +- root" data when the
// radicand is a rational square, otherwise through doubles (imaginary when
// the radicand is negative).
BabylonianResult combine(const Rational& plus_part, const Rational& minus_part,
                         const Rational& radicand, bool swap_center) {
  // swap_center = false: x = c + s, y = c - s with c = plus_part
  // swap_center = true:  x = s + c, y = s - c (the root leads)
  BabylonianResult out;
  if (auto s = sqrt_exact(radicand)) {
    Rational x = swap_center ? *s + plus_part : plus_part + *s;
    Rational y = swap_center ? *s - minus_part : minus_part - *s;
    out.exact = true;
    out.exact_values = {x, y};
    out.x = Complex(x.to_double(), 0.0);
    out.y = Complex(y.to_double(), 0.0);
    return out;
  }
  double rad = radicand.to_double();
  Complex s = rad >= 0.0 ? Complex(std::sqrt(rad), 0.0) : Complex(0.0, std::sqrt(-rad));
  Complex c(plus_part.to_double(), 0.0);
  Complex c2(minus_part.to_double(), 0.0);
  out.x = swap_center ? s + c : c + s;
  out.y = swap_center ? s - c2 : c2 - s;
  return out;
}

}  // namespace

FalsePositionResult false_position(const Rational& coeff, const Rational& b) {
  Rational one_plus = Rational(1) + coeff;
  if (one_plus.is_zero()) throw std::domain_error("degenerate: 1 + coeff = 0");
  FalsePositionResult r;
  r.trial = Rational(coeff.den());
  r.evaluation = r.trial * one_plus;
  r.ratio = b / r.evaluation;
  r.solution = r.trial * r.ratio;
  return r;
}

BabylonianResult babylonian_sum_product(const Rational& a, const Rational& b) {
  Rational half = a / Rational(2);
  return combine(half, half, half * half - b, /*swap_center=*/false);
}

BabylonianResult babylonian_diff_product(const Rational& a, const Rational& b) {
  Rational half = a / Rational(2);
  return combine(half, half, half * half + b, /*swap_center=*/true);
}

BabylonianResult babylonian_sum_of_squares(SquareSign sign, const Rational& a,
                                           const Rational& b) {
  Rational half = a / Rational(2);
  Rational radicand = b / Rational(2) - half * half;
  return combine(half, half, radicand, /*swap_center=*/sign == SquareSign::minus);
}

LinearSystem parse_system(std::string_view text) {
  LinearSystem sys;
  std::size_t line_no = 0;
  std::size_t start = 0;
  std::size_t width = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    std::string line(text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start));
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream is(line);
    std::vector<Rational> coeffs;
    std::optional<Rational> constant;
    std::string tok;
    bool after_bar = false;
    while (is >> tok) {
      if (tok == "|") {
        if (after_bar) throw std::invalid_argument("line " + std::to_string(line_no) + ": two '|'");
        after_bar = true;
        continue;
      }
      Rational value = Rational::parse(tok);
      if (after_bar) {
        if (constant) throw std::invalid_argument("line " + std::to_string(line_no) +
                                                  ": more than one constant after '|'");
        constant = value;
      } else {
        coeffs.push_back(value);
      }
    }
    if (!coeffs.empty() || constant) {
      if (!constant)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": missing '| constant'");
      if (coeffs.empty())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": no coefficients");
      if (width == 0) width = coeffs.size();
      if (coeffs.size() != width)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected " +
                                    std::to_string(width) + " coefficients");
      sys.a.push_back(std::move(coeffs));
      sys.b.push_back(*constant);
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return sys;
}

EliminationResult eliminate(const LinearSystem& sys) {
  const std::size_t m = sys.rows();
  const std::size_t n = sys.cols();
  if (m == 0 || n == 0) throw std::domain_error("empty system");
  if (sys.b.size() != m) throw std::invalid_argument("constant column length mismatch");
  for (const auto& row : sys.a)
    if (row.size() != n) throw std::invalid_argument("ragged coefficient rows");

  std::vector<std::vector<Rational>> a = sys.a;
  std::vector<Rational> b = sys.b;

  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    // first nonzero entry in this column at or below the current row
    std::size_t pivot = rank;
    while (pivot < m && a[pivot][col].is_zero()) ++pivot;
    if (pivot == m) continue;
    std::swap(a[pivot], a[rank]);
    std::swap(b[pivot], b[rank]);

    Rational inv = a[rank][col].reciprocal();
    for (std::size_t j = 0; j < n; ++j) a[rank][j] *= inv;
    b[rank] *= inv;

    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      Rational factor = a[i][col];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= factor * a[rank][j];
      b[i] -= factor * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  EliminationResult res;
  res.rank = rank;
  for (std::size_t i = rank; i < m; ++i) {
    bool zero_row = true;
    for (const Rational& v : a[i])
      if (!v.is_zero()) zero_row = false;
    if (zero_row && !b[i].is_zero()) {
      res.kind = SolutionKind::inconsistent;
      return res;
    }
  }
  if (rank < n) {
    res.kind = SolutionKind::underdetermined;
    return res;
  }
  res.kind = SolutionKind::unique;
  res.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < rank; ++i) res.solution[pivot_col[i]] = b[i];
  return res;
}

}  // namespace algebra
