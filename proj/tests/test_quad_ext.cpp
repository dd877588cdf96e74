#include <algorithm>
#include <random>
#include <vector>

#include "algebra/quad_ext.hpp"
#include "doctest.h"

using namespace algebra;

namespace {

Rational random_rational(std::mt19937& rng, int bound = 12) {
  std::uniform_int_distribution<int> num(-bound, bound);
  std::uniform_int_distribution<int> den(1, bound);
  return Rational(num(rng), den(rng));
}

QuadExtElem random_elem(std::mt19937& rng) {
  return {random_rational(rng), random_rational(rng)};
}

// All pairs (x, y) with small numerators/denominators whose square is (d, 0).
std::vector<QuadExtElem> brute_sqrt_solutions(const ExtensionField& field, int bound) {
  std::vector<QuadExtElem> found;
  const QuadExtElem target{field.d(), 0};
  for (int xn = -bound; xn <= bound; ++xn)
    for (int xd = 1; xd <= bound; ++xd)
      for (int yn = -bound; yn <= bound; ++yn)
        for (int yd = 1; yd <= bound; ++yd) {
          QuadExtElem cand{Rational(xn, xd), Rational(yn, yd)};
          if (field.mul(cand, cand) == target) {
            if (std::find(found.begin(), found.end(), cand) == found.end()) found.push_back(cand);
          }
        }
  return found;
}

}  // namespace

TEST_CASE("pair arithmetic") {
  ExtensionField q2{Rational(2)};
  CHECK(q2.mul({0, 1}, {0, 1}) == QuadExtElem{2, 0});
  CHECK(q2.add({1, 0}, {0, 0}) == QuadExtElem{1, 0});
  ExtensionField q3{Rational(3)};
  CHECK(q3.mul({0, 1}, {0, 1}) == QuadExtElem{3, 0});
}

TEST_CASE("inverses multiply back to unity") {
  ExtensionField q2{Rational(2)};
  CHECK(q2.inverse({1, 1}) == QuadExtElem{-1, 1});  // 1 - 2 = -1 in the denominator
  CHECK(q2.inverse({1, 0}) == QuadExtElem{1, 0});
  CHECK(q2.inverse({0, 1}) == QuadExtElem{0, Rational(1, 2)});
  CHECK_THROWS_WITH_AS(q2.inverse({0, 0}), "zero has no inverse", std::domain_error);

  std::mt19937 rng(51);
  int done = 0;
  while (done < 300) {
    QuadExtElem a = random_elem(rng);
    if (a.is_zero()) continue;
    ++done;
    CHECK(q2.mul(a, q2.inverse(a)) == ExtensionField::one());
  }
}

TEST_CASE("conjugation") {
  CHECK(conjugate({0, 1}) == QuadExtElem{0, -1});
  CHECK(conjugate({Rational(5), 0}) == QuadExtElem{5, 0});
  CHECK(conjugate({Rational(3, 7), 5}) == QuadExtElem{Rational(3, 7), -5});
}

TEST_CASE("conjugation is a field automorphism and an involution") {
  std::mt19937 rng(52);
  ExtensionField q2{Rational(2)};
  for (int trial = 0; trial < 300; ++trial) {
    QuadExtElem a = random_elem(rng), b = random_elem(rng);
    CHECK(conjugate(q2.add(a, b)) == q2.add(conjugate(a), conjugate(b)));
    CHECK(conjugate(q2.mul(a, b)) == q2.mul(conjugate(a), conjugate(b)));
    CHECK(conjugate(conjugate(a)) == a);
  }
  // swaps the two roots of x^2 = d
  auto [r1, r2] = q2.solve_sqrt();
  CHECK(conjugate(r1) == r2);
  CHECK(conjugate(r2) == r1);
}

TEST_CASE("x^2 = d has exactly the two pair solutions") {
  for (int d : {2, 3}) {
    ExtensionField field{Rational(d)};
    auto [r1, r2] = field.solve_sqrt();
    CHECK(r1 == QuadExtElem{0, 1});
    CHECK(r2 == QuadExtElem{0, -1});
    CHECK(field.mul(r1, r1) == QuadExtElem{d, 0});
    CHECK(field.mul(r2, r2) == QuadExtElem{d, 0});
    // brute scan over small rationals finds no further solutions
    auto found = brute_sqrt_solutions(field, 6);
    REQUIRE(found.size() == 2);
    CHECK(std::find(found.begin(), found.end(), r1) != found.end());
    CHECK(std::find(found.begin(), found.end(), r2) != found.end());
  }
}

TEST_CASE("field laws for several d") {
  std::mt19937 rng(53);
  for (Rational d : {Rational(2), Rational(3), Rational(5), Rational(1, 2), Rational(-1)}) {
    ExtensionField field{d};
    for (int trial = 0; trial < 120; ++trial) {
      QuadExtElem a = random_elem(rng), b = random_elem(rng), c = random_elem(rng);
      CHECK(field.add(a, b) == field.add(b, a));
      CHECK(field.mul(a, b) == field.mul(b, a));
      CHECK(field.add(field.add(a, b), c) == field.add(a, field.add(b, c)));
      CHECK(field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c)));
      CHECK(field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c)));
      CHECK(field.add(a, QuadExtElem{-a.x, -a.y}) == ExtensionField::zero());
      if (!a.is_zero()) CHECK(field.mul(a, field.inverse(a)) == ExtensionField::one());
    }
  }
}

TEST_CASE("no zero divisors") {
  std::mt19937 rng(54);
  ExtensionField q2{Rational(2)};
  int done = 0;
  while (done < 300) {
    QuadExtElem a = random_elem(rng), b = random_elem(rng);
    if (a.is_zero() || b.is_zero()) continue;
    ++done;
    CHECK(!q2.mul(a, b).is_zero());
  }
}

TEST_CASE("square radicands are rejected") {
  CHECK_THROWS_AS(ExtensionField{Rational(4, 9)}, std::domain_error);
  CHECK_THROWS_AS(ExtensionField{Rational(4)}, std::domain_error);
  CHECK_THROWS_AS(ExtensionField{Rational(0)}, std::domain_error);
  CHECK_THROWS_AS(ExtensionField{Rational(1)}, std::domain_error);
  CHECK_NOTHROW(ExtensionField{Rational(-4)});  // -4 is no rational square
}

TEST_CASE("text form") {
  ExtensionField q2{Rational(2)};
  CHECK(q2.format({Rational(3, 7), 5}) == "3/7+5*sqrt(2)");
  CHECK(q2.format({0, Rational(-1, 3)}) == "-1/3*sqrt(2)");
  CHECK(q2.format({0, 1}) == "sqrt(2)");
  CHECK(q2.format({2, 0}) == "2");
  CHECK(q2.format({1, -1}) == "1-sqrt(2)");
  CHECK(q2.format({0, 0}) == "0");

  CHECK(q2.parse("3/7+5*sqrt(2)") == QuadExtElem{Rational(3, 7), 5});
  CHECK(q2.parse("sqrt(2)") == QuadExtElem{0, 1});
  CHECK(q2.parse("-sqrt(2)") == QuadExtElem{0, -1});
  CHECK(q2.parse("1 - 1/2*sqrt(2)") == QuadExtElem{1, Rational(-1, 2)});
  CHECK(q2.parse("5") == QuadExtElem{5, 0});
  CHECK_THROWS_AS(q2.parse("sqrt(3)"), std::invalid_argument);
  CHECK_THROWS_AS(q2.parse("1+1+sqrt(2)"), std::invalid_argument);
  CHECK_THROWS_AS(q2.parse(""), std::invalid_argument);

  std::mt19937 rng(55);
  for (int trial = 0; trial < 100; ++trial) {
    QuadExtElem a = random_elem(rng);
    CHECK(q2.parse(q2.format(a)) == a);
  }
}
