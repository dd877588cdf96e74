#include <algorithm>
#include <numeric>
#include <random>

#include "algebra/classify.hpp"
#include "algebra/isomorphism.hpp"
#include "algebra/permutation.hpp"
#include "algebra/ring.hpp"
#include "doctest.h"

using namespace algebra;

namespace {

// Exhaustive oracle over all n! bijections; usable for n <= 5.
bool isomorphic_oracle(const CayleyTable& t1, const CayleyTable& t2) {
  if (t1.size() != t2.size()) return false;
  std::vector<std::size_t> map(t1.size());
  std::iota(map.begin(), map.end(), 0);
  do {
    if (is_isomorphism(t1, t2, map)) return true;
  } while (std::next_permutation(map.begin(), map.end()));
  return false;
}

CayleyTable klein_four() {
  // every element is its own inverse
  return CayleyTable({"e", "a", "b", "c"},
                     {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
}

CayleyTable relabel(const CayleyTable& t, const std::vector<std::size_t>& perm,
                    const std::string& prefix) {
  // new table with element k renamed/positioned at perm[k]
  const std::size_t n = t.size();
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[i] = prefix + std::to_string(i);
  std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::size_t> inv(n);
      for (std::size_t k = 0; k < n; ++k) inv[perm[k]] = k;
      rows[i][j] = perm[t.apply(inv[i], inv[j])];
    }
  return CayleyTable(names, rows);
}

}  // namespace

TEST_CASE("S_3 and the triangle motions are isomorphic") {
  CayleyTable s3 = symmetric_group_table(3);
  TriangleGroup tg = triangle_group();

  auto witness = are_isomorphic(s3, tg.table);
  REQUIRE(witness.has_value());
  CHECK(is_isomorphism(s3, tg.table, *witness));

  // the explicit correspondence shipped with the triangle group validates too
  std::vector<std::size_t> f(s3.size());
  for (const auto& [from, to] : tg.iso_from_s3) f[s3.require(from)] = tg.table.require(to);
  CHECK(is_isomorphism(s3, tg.table, f));
}

TEST_CASE("Z_4 is not the Klein-type group") {
  CayleyTable z4 = residue_ring(4).add;
  CayleyTable klein = klein_four();
  CHECK(!are_isomorphic(z4, klein).has_value());
  CHECK(!isomorphic_oracle(z4, klein));
}

TEST_CASE("a table is isomorphic to itself by the identity") {
  for (const CayleyTable& t : {symmetric_group_table(3), residue_ring(5).add, klein_four()}) {
    auto witness = are_isomorphic(t, t);
    REQUIRE(witness.has_value());
    std::vector<std::size_t> identity(t.size());
    std::iota(identity.begin(), identity.end(), 0);
    CHECK(*witness == identity);
  }
}

TEST_CASE("size mismatch short-circuits") {
  CHECK(!are_isomorphic(residue_ring(4).add, residue_ring(5).add).has_value());
}

TEST_CASE("search agrees with the all-bijections oracle") {
  std::mt19937 rng(77);
  std::vector<std::pair<CayleyTable, CayleyTable>> cases;
  cases.emplace_back(residue_ring(4).add, klein_four());
  cases.emplace_back(residue_ring(5).add, residue_ring(5).add);
  cases.emplace_back(residue_ring(4).mul, residue_ring(4).mul);
  cases.emplace_back(residue_ring(5).mul, residue_ring(4).mul);

  // scrambled copies must come back isomorphic
  for (unsigned m : {3u, 4u, 5u}) {
    CayleyTable t = residue_ring(m).add;
    std::vector<std::size_t> perm(t.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    cases.emplace_back(t, relabel(t, perm, "r"));
  }

  // a few random groupoids on 3..4 elements
  std::uniform_int_distribution<std::size_t> size_dist(3, 4);
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = size_dist(rng);
    auto random_table = [&](const std::string& prefix) {
      std::vector<std::string> names;
      for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
      std::uniform_int_distribution<std::size_t> entry(0, n - 1);
      std::vector<std::vector<std::size_t>> rows(n, std::vector<std::size_t>(n));
      for (auto& row : rows)
        for (auto& v : row) v = entry(rng);
      return CayleyTable(names, rows);
    };
    cases.emplace_back(random_table("x"), random_table("y"));
  }

  for (const auto& [t1, t2] : cases) {
    auto witness = are_isomorphic(t1, t2);
    CHECK(witness.has_value() == isomorphic_oracle(t1, t2));
    if (witness) CHECK(is_isomorphism(t1, t2, *witness));
  }
}

TEST_CASE("isomorphism transfers the classification flags") {
  std::mt19937 rng(78);
  std::vector<std::pair<CayleyTable, CayleyTable>> cases;
  for (unsigned m : {2u, 3u, 4u, 6u}) {
    for (const CayleyTable& t : {residue_ring(m).add, residue_ring(m).mul}) {
      std::vector<std::size_t> perm(t.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      cases.emplace_back(t, relabel(t, perm, "s"));
    }
  }
  cases.emplace_back(symmetric_group_table(3), triangle_group().table);

  for (const auto& [t1, t2] : cases) {
    auto witness = are_isomorphic(t1, t2);
    REQUIRE(witness.has_value());
    StructureReport r1 = classify_magma(t1);
    StructureReport r2 = classify_magma(t2);
    CHECK(r1.is_groupoid == r2.is_groupoid);
    CHECK(r1.is_semigroup == r2.is_semigroup);
    CHECK(r1.is_monoid == r2.is_monoid);
    CHECK(r1.is_group == r2.is_group);
    CHECK(r1.is_abelian == r2.is_abelian);
  }
}
