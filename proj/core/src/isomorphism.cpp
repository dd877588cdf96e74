#include "algebra/isomorphism.hpp"

#include <algorithm>

#include "algebra/classify.hpp"

namespace algebra {

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

// Order of x under repeated composition when the table is a group: smallest
// k >= 1 with x^k = e.
std::vector<std::size_t> element_orders(const CayleyTable& t, std::size_t e) {
  std::vector<std::size_t> orders(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) {
    std::size_t acc = x, k = 1;
    while (acc != e) {
      acc = t.apply(acc, x);
      ++k;
    }
    orders[x] = k;
  }
  return orders;
}

struct Search {
  const CayleyTable& t1;
  const CayleyTable& t2;
  std::vector<std::size_t> map;      // t1 index -> t2 index or kUnset
  std::vector<bool> used;            // t2 indices taken
  std::vector<std::size_t> orders1;  // empty unless both tables are groups
  std::vector<std::size_t> orders2;

  // Every product whose operands and result are all mapped so far must agree.
  bool consistent(std::size_t i) const {
    const std::size_t n = t1.size();
    for (std::size_t a = 0; a < n; ++a) {
      if (map[a] == kUnset) continue;
      std::size_t p = t1.apply(a, i);
      if (map[p] != kUnset && t2.apply(map[a], map[i]) != map[p]) return false;
      p = t1.apply(i, a);
      if (map[p] != kUnset && t2.apply(map[i], map[a]) != map[p]) return false;
    }
    return true;
  }

  bool extend(std::size_t i) {
    const std::size_t n = t1.size();
    if (i == n) return true;
    if (map[i] != kUnset) return extend(i + 1);
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j]) continue;
      if (!orders1.empty() && orders1[i] != orders2[j]) continue;
      map[i] = j;
      used[j] = true;
      if (consistent(i) && extend(i + 1)) return true;
      map[i] = kUnset;
      used[j] = false;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphism(const CayleyTable& t1, const CayleyTable& t2,
                    const std::vector<std::size_t>& map) {
  const std::size_t n = t1.size();
  if (t2.size() != n || map.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (std::size_t v : map) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (t2.apply(map[a], map[b]) != map[t1.apply(a, b)]) return false;
  return true;
}

std::optional<std::vector<std::size_t>> are_isomorphic(const CayleyTable& t1,
                                                       const CayleyTable& t2) {
  const std::size_t n = t1.size();
  if (t2.size() != n) return std::nullopt;

  NeutralScan n1 = find_neutral(t1);
  NeutralScan n2 = find_neutral(t2);
  if (n1.neutral.has_value() != n2.neutral.has_value()) return std::nullopt;

  Search search{t1, t2, std::vector<std::size_t>(n, kUnset), std::vector<bool>(n, false), {}, {}};
  if (n1.neutral) {
    search.map[*n1.neutral] = *n2.neutral;  // a neutral can only map to a neutral
    search.used[*n2.neutral] = true;
    StructureReport r1 = classify_magma(t1);
    StructureReport r2 = classify_magma(t2);
    if (r1.is_group != r2.is_group) return std::nullopt;
    if (r1.is_group) {
      search.orders1 = element_orders(t1, *n1.neutral);
      search.orders2 = element_orders(t2, *n2.neutral);
      std::vector<std::size_t> s1 = search.orders1, s2 = search.orders2;
      std::sort(s1.begin(), s1.end());
      std::sort(s2.begin(), s2.end());
      if (s1 != s2) return std::nullopt;  // order multisets must agree
    }
  }
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

}  // namespace algebra
