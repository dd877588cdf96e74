#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "algebra/cayley_table.hpp"

namespace algebra {

/// Two-sided neutral (unique if present) plus the strictly one-sided ones.
struct NeutralScan {
  std::optional<std::size_t> neutral;
  std::vector<std::size_t> right_only;  // x*e = x for all x, but not e*x = x
  std::vector<std::size_t> left_only;
};

NeutralScan find_neutral(const CayleyTable& t);

/// Empty when associative; otherwise the lexicographically first triple
/// (x, y, z) with x*(y*z) != (x*y)*z. Full O(n^3) scan.
std::optional<std::array<std::size_t, 3>> check_associative(const CayleyTable& t);

/// Two-sided inverse of x in a table with neutral e, if any.
std::optional<std::size_t> inverse_in(const CayleyTable& t, std::size_t e, std::size_t x);

struct StructureReport {
  bool is_groupoid = true;  // closure holds for every parsed table
  bool is_semigroup = false;
  bool is_monoid = false;
  bool is_group = false;
  bool is_abelian = false;
  std::optional<std::size_t> neutral;
  std::optional<std::array<std::size_t, 3>> non_associative_witness;
  std::vector<std::size_t> non_invertible;  // meaningful only when a neutral exists
};

StructureReport classify_magma(const CayleyTable& t);

/// Solutions of a*x = b and y*a = b in a group table (Theorem-4 style:
/// x = a^-1 * b, y = b * a^-1). Throws unless the table is a group.
struct GroupSolution {
  std::size_t x;
  std::size_t y;
};
GroupSolution solve_in_group(const CayleyTable& t, std::size_t a, std::size_t b);

/// Every nonempty subset closed under the table operation (in a group table
/// such a subset is a subgroup). Results sorted by size, then lexicographically.
/// Throws for tables larger than max_n.
std::vector<std::vector<std::size_t>> subgroups(const CayleyTable& t, std::size_t max_n = 12);

}  // namespace algebra
