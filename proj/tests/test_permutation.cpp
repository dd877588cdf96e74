#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "algebra/classify.hpp"
#include "algebra/isomorphism.hpp"
#include "algebra/permutation.hpp"
#include "doctest.h"

using namespace algebra;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Permutation random_perm(std::mt19937& rng, int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation::from_image(image);
}

}  // namespace

TEST_CASE("two-row construction ignores column order") {
  Permutation a = Permutation::from_rows({1, 2, 3}, {2, 1, 3});
  CHECK(a.apply(1) == 2);
  CHECK(a.apply(2) == 1);
  CHECK(a.apply(3) == 3);
  CHECK(Permutation::from_rows({2, 1, 3}, {1, 2, 3}) == a);
  CHECK(Permutation::from_rows({3, 1, 2}, {3, 2, 1}) == a);
  CHECK_THROWS_AS(Permutation::from_rows({1, 2}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_rows({1, 2}, {1, 2, 3}), std::invalid_argument);

  std::mt19937 rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    Permutation p = random_perm(rng, 5);
    std::vector<int> top(5), bottom(5);
    std::iota(top.begin(), top.end(), 1);
    std::shuffle(top.begin(), top.end(), rng);
    for (int k = 0; k < 5; ++k) bottom[static_cast<std::size_t>(k)] = p.apply(top[static_cast<std::size_t>(k)]);
    CHECK(Permutation::from_rows(top, bottom) == p);
  }
}

TEST_CASE("composition applies the left factor first") {
  Permutation alpha = Permutation::from_image({1, 3, 2});
  Permutation beta = Permutation::from_image({2, 1, 3});
  Permutation ab = alpha * beta;
  CHECK(ab == Permutation::from_image({2, 3, 1}));
  Permutation ba = beta * alpha;
  CHECK(ba == Permutation::from_image({3, 1, 2}));
  CHECK(ab != ba);

  Permutation e(3);
  CHECK(e * alpha == alpha);
  CHECK(alpha * e == alpha);
  CHECK_THROWS_AS(alpha * Permutation(4), std::invalid_argument);
}

TEST_CASE("inverses") {
  Permutation swap12 = Permutation::from_image({2, 1, 3});
  CHECK(swap12.inverse() == swap12);
  Permutation alpha3 = Permutation::from_image({2, 3, 1});
  Permutation alpha4 = Permutation::from_image({3, 1, 2});
  CHECK(alpha3.inverse() == alpha4);
  CHECK((alpha3 * alpha4).is_identity());
  CHECK(Permutation(4).inverse() == Permutation(4));

  std::mt19937 rng(42);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation p = random_perm(rng, 6);
    CHECK((p * p.inverse()).is_identity());
    CHECK((p.inverse() * p).is_identity());
  }
}

TEST_CASE("reverse-order inverse of a triple product") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation a = random_perm(rng, 5), b = random_perm(rng, 5), c = random_perm(rng, 5);
    CHECK((a * b * c).inverse() == c.inverse() * b.inverse() * a.inverse());
  }
}

TEST_CASE("text form round trips") {
  Permutation p = Permutation::parse("(1 2 3 / 2 1 3)");
  CHECK(p == Permutation::from_image({2, 1, 3}));
  CHECK(p.to_string() == "(1 2 3 / 2 1 3)");
  CHECK(Permutation::parse("(2 1 3 / 1 2 3)") == p);
  CHECK_THROWS_AS(Permutation::parse("(1 2 3 2 1 3)"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(1 2 / 1 1)"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::parse("(1 x / 1 2)"), std::invalid_argument);

  std::mt19937 rng(44);
  for (int trial = 0; trial < 50; ++trial) {
    Permutation p6 = random_perm(rng, 6);
    CHECK(Permutation::parse(p6.to_string()) == p6);
  }
}

TEST_CASE("S_3 table matches the frozen rendering cell for cell") {
  CayleyTable t = symmetric_group_table(3);
  CHECK(t.to_text() == read_file(std::string(ALGEBRA_GOLDEN_DIR) + "/table2.txt"));
  // spot entries: row α1 col α4 = α5, row α3 col α3 = α4
  CHECK(t.apply(t.require("α1"), t.require("α4")) == t.require("α5"));
  CHECK(t.apply(t.require("α3"), t.require("α3")) == t.require("α4"));
}

TEST_CASE("small symmetric groups") {
  CayleyTable s1 = symmetric_group_table(1);
  CHECK(s1.size() == 1);
  CHECK(classify_magma(s1).is_group);

  CayleyTable s2 = symmetric_group_table(2);
  CHECK(s2.size() == 2);
  StructureReport r2 = classify_magma(s2);
  CHECK(r2.is_group);
  CHECK(r2.is_abelian);

  for (int n = 1; n <= 4; ++n) {
    StructureReport rep = classify_magma(symmetric_group_table(n));
    CHECK(rep.is_group);
    CHECK(rep.is_abelian == (n <= 2));
  }
  CHECK_THROWS_AS(symmetric_group_table(6), std::domain_error);
  CHECK_THROWS_AS(symmetric_group_table(0), std::domain_error);
}

TEST_CASE("composition always yields a bijection") {
  std::mt19937 rng(45);
  for (int trial = 0; trial < 100; ++trial) {
    Permutation a = random_perm(rng, 7), b = random_perm(rng, 7);
    Permutation c = a * b;
    std::vector<bool> seen(7, false);
    for (int i = 1; i <= 7; ++i) {
      int v = c.apply(i);
      CHECK(v >= 1);
      CHECK(v <= 7);
      CHECK(!seen[static_cast<std::size_t>(v) - 1]);
      seen[static_cast<std::size_t>(v) - 1] = true;
    }
  }
}

TEST_CASE("stabilizers") {
  SUBCASE("fixing 1 in degree 3") {
    auto stab = stabilizer(3, {1});
    REQUIRE(stab.size() == 2);
    CHECK(stab[0].is_identity());
    CHECK(stab[1] == Permutation::from_image({1, 3, 2}));
  }
  SUBCASE("fixing nothing gives the whole group") {
    CHECK(stabilizer(4, {}).size() == 24);
  }
  SUBCASE("fixing everything gives only the identity") {
    auto stab = stabilizer(3, {1, 2, 3});
    REQUIRE(stab.size() == 1);
    CHECK(stab[0].is_identity());
  }
  SUBCASE("size is (n-k)! and the set is closed") {
    auto stab = stabilizer(4, {1});
    CHECK(stab.size() == 6);
    for (const Permutation& a : stab) {
      CHECK(std::find(stab.begin(), stab.end(), a.inverse()) != stab.end());
      for (const Permutation& b : stab)
        CHECK(std::find(stab.begin(), stab.end(), a * b) != stab.end());
    }
  }
  SUBCASE("points must lie in range") {
    CHECK_THROWS_AS(stabilizer(3, {4}), std::domain_error);
    CHECK_THROWS_AS(stabilizer(3, {0}), std::domain_error);
  }
}

TEST_CASE("triangle-motion group") {
  TriangleGroup tg = triangle_group();
  CHECK(tg.table.to_text() + "" == read_file(std::string(ALGEBRA_GOLDEN_DIR) + "/table3.txt")
                                       .substr(0, tg.table.to_text().size()));

  const CayleyTable& t = tg.table;
  // squared rotation gives the opposite rotation
  CHECK(t.apply(t.require("β4"), t.require("β4")) == t.require("β5"));
  // the grid composes in function order, so the left factor of a sequential
  // product is read on the column: β2 then β5 lands at (row β5, col β2)
  CHECK(t.apply(t.require("β5"), t.require("β2")) == t.require("β1"));
  CHECK(t.apply(t.require("β2"), t.require("β5")) == t.require("β3"));

  StructureReport rep = classify_magma(t);
  CHECK(rep.is_group);
  CHECK(!rep.is_abelian);

  CayleyTable s3 = symmetric_group_table(3);
  std::vector<std::size_t> f(s3.size());
  for (const auto& [from, to] : tg.iso_from_s3) f[s3.require(from)] = t.require(to);
  CHECK(is_isomorphism(s3, t, f));
  CHECK(are_isomorphic(s3, t).has_value());
}
