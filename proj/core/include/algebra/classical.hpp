#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra/complex_utils.hpp"
#include "algebra/rational.hpp"

namespace algebra {

/// Trace of solving x + coeff*x = b from an integral trial value: the trial
/// is the denominator of coeff (so evaluating the left side stays integral),
/// and the answer rescales it by b over the trial evaluation.
struct FalsePositionResult {
  Rational trial;
  Rational evaluation;  // trial * (1 + coeff)
  Rational ratio;       // b / evaluation
  Rational solution;    // trial * ratio; satisfies (1 + coeff)*x = b exactly
};

FalsePositionResult false_position(const Rational& coeff, const Rational& b);

/// Output of the two-unknown recipes. Exact rationals are attached whenever
/// the radicand is the square of a rational; otherwise only the double
/// (possibly complex) pair is meaningful.
struct BabylonianResult {
  Complex x;
  Complex y;
  bool exact = false;
  std::optional<std::pair<Rational, Rational>> exact_values;
};

/// x + y = a, x*y = b via x,y = a/2 +- sqrt((a/2)^2 - b).
BabylonianResult babylonian_sum_product(const Rational& a, const Rational& b);
/// x - y = a, x*y = b via sqrt((a/2)^2 + b) +- a/2.
BabylonianResult babylonian_diff_product(const Rational& a, const Rational& b);

enum class SquareSign { plus, minus };

/// x +- y = a, x^2 + y^2 = b; the radicand is b/2 - (a/2)^2 in both cases,
/// combined with a/2 by addition/subtraction as the sign demands.
BabylonianResult babylonian_sum_of_squares(SquareSign sign, const Rational& a, const Rational& b);

/// m equations, n unknowns, right-hand sides in b.
struct LinearSystem {
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;

  std::size_t rows() const { return a.size(); }
  std::size_t cols() const { return a.empty() ? 0 : a.front().size(); }
};

/// One equation per line: coefficients, then "|", then the constant.
LinearSystem parse_system(std::string_view text);

enum class SolutionKind { unique, inconsistent, underdetermined };

struct EliminationResult {
  SolutionKind kind;
  std::vector<Rational> solution;  // filled only for unique
  std::size_t rank;
};

/// Exact Gauss-Jordan elimination using row combination, row scaling and row
/// interchange only. Unique solutions substitute back exactly.
EliminationResult eliminate(const LinearSystem& sys);

}  // namespace algebra
