#include "algebra/classify.hpp"

#include <algorithm>
#include <set>

namespace algebra {

NeutralScan find_neutral(const CayleyTable& t) {
  NeutralScan scan;
  const std::size_t n = t.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool right = true, left = true;
    for (std::size_t x = 0; x < n; ++x) {
      if (t.apply(x, e) != x) right = false;
      if (t.apply(e, x) != x) left = false;
      if (!right && !left) break;
    }
    if (right && left) {
      scan.neutral = e;  // at most one by Theorem 1; keep scanning anyway
    } else if (right) {
      scan.right_only.push_back(e);
    } else if (left) {
      scan.left_only.push_back(e);
    }
  }
  return scan;
}

std::optional<std::array<std::size_t, 3>> check_associative(const CayleyTable& t) {
  const std::size_t n = t.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (t.apply(x, t.apply(y, z)) != t.apply(t.apply(x, y), z))
          return std::array<std::size_t, 3>{x, y, z};
  return std::nullopt;
}

std::optional<std::size_t> inverse_in(const CayleyTable& t, std::size_t e, std::size_t x) {
  for (std::size_t y = 0; y < t.size(); ++y)
    if (t.apply(x, y) == e && t.apply(y, x) == e) return y;
  return std::nullopt;
}

StructureReport classify_magma(const CayleyTable& t) {
  StructureReport rep;
  const std::size_t n = t.size();

  rep.non_associative_witness = check_associative(t);
  rep.is_semigroup = !rep.non_associative_witness.has_value();

  NeutralScan scan = find_neutral(t);
  rep.neutral = scan.neutral;
  rep.is_monoid = rep.is_semigroup && rep.neutral.has_value();

  if (rep.neutral) {
    for (std::size_t x = 0; x < n; ++x)
      if (!inverse_in(t, *rep.neutral, x)) rep.non_invertible.push_back(x);
  }
  rep.is_group = rep.is_monoid && rep.neutral && rep.non_invertible.empty();

  rep.is_abelian = true;
  for (std::size_t x = 0; x < n && rep.is_abelian; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (t.apply(x, y) != t.apply(y, x)) {
        rep.is_abelian = false;
        break;
      }
  return rep;
}

GroupSolution solve_in_group(const CayleyTable& t, std::size_t a, std::size_t b) {
  StructureReport rep = classify_magma(t);
  if (!rep.is_group) throw std::domain_error("Theorem 4 requires a group");
  std::size_t inv_a = *inverse_in(t, *rep.neutral, a);
  return {t.apply(inv_a, b), t.apply(b, inv_a)};
}

std::vector<std::vector<std::size_t>> subgroups(const CayleyTable& t, std::size_t max_n) {
  const std::size_t n = t.size();
  if (n > max_n)
    throw std::domain_error("subgroup enumeration is limited to tables of size <= " +
                            std::to_string(max_n));
  if (!classify_magma(t).is_group) throw std::domain_error("subgroups requires a group table");

  // Closure of every subset seed; in a finite group each closure is a subgroup
  // and every subgroup is its own closure.
  std::set<std::vector<std::size_t>> found;
  const std::size_t limit = std::size_t{1} << n;
  for (std::size_t mask = 1; mask < limit; ++mask) {
    std::vector<bool> in(n, false);
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) {
        in[i] = true;
        members.push_back(i);
      }
    for (std::size_t head = 0; head < members.size(); ++head)
      for (std::size_t k = 0; k <= head; ++k) {
        for (std::size_t prod :
             {t.apply(members[head], members[k]), t.apply(members[k], members[head])})
          if (!in[prod]) {
            in[prod] = true;
            members.push_back(prod);
          }
      }
    std::sort(members.begin(), members.end());
    found.insert(std::move(members));
  }

  std::vector<std::vector<std::size_t>> result(found.begin(), found.end());
  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return result;
}

}  // namespace algebra
