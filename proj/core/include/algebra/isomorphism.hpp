#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "algebra/cayley_table.hpp"

namespace algebra {

/// A bijection f (as index map t1 -> t2) with f(x*y) = f(x)*f(y), if one
/// exists. Backtracking search pruned by the neutral-element image and, for
/// group tables, by element orders. |t1| != |t2| short-circuits to empty.
std::optional<std::vector<std::size_t>> are_isomorphic(const CayleyTable& t1,
                                                       const CayleyTable& t2);

/// Checks one explicit candidate map (t1 index -> t2 index) cell by cell.
bool is_isomorphism(const CayleyTable& t1, const CayleyTable& t2,
                    const std::vector<std::size_t>& map);

}  // namespace algebra
