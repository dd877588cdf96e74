#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "algebra/cayley_table.hpp"

namespace algebra {

/// Addition and multiplication tables of Z_m: elements "0".."m-1", entry
/// (i, j) = (i op j) mod m. Throws for m < 2.
RingTables residue_ring(unsigned m);

struct DistributivityWitness {
  std::array<std::size_t, 3> triple;  // (x, y, z)
  bool left;                          // x(y+z) != xy+xz, else (y+z)x != yx+zx
};

struct RingReport {
  bool add_abelian_group = false;
  std::optional<std::size_t> zero;  // additive neutral
  bool distributive = false;
  std::optional<DistributivityWitness> distributive_witness;
  bool associative_mul = false;
  bool commutative_mul = false;
  std::optional<std::size_t> unity;
  std::vector<std::pair<std::size_t, std::size_t>> zero_divisors;  // all ordered pairs
  bool is_integral = false;
  bool is_field = false;
  std::optional<unsigned> characteristic;  // present iff unity and zero exist
};

/// Full-scan classification of a two-operation table pair. Both tables must
/// be over the same element list ("element-list mismatch" otherwise).
RingReport ring_classify(const CayleyTable& add, const CayleyTable& mul);

/// Smallest p >= 1 with the p-fold sum of unity equal to the additive
/// neutral; always exists in a finite table whose add is a group.
unsigned characteristic(const CayleyTable& add, std::size_t unity);

/// A chain x_0 < x_1 < ... compatible with the ordered-field axioms
/// "x <= y implies x+z <= y+z" and "0 <= x, 0 <= y implies 0 <= xy",
/// found by brute force over all chains; empty when no chain works.
/// Throws for tables larger than max_n.
std::optional<std::vector<std::size_t>> find_total_order(const CayleyTable& add,
                                                         const CayleyTable& mul,
                                                         std::size_t max_n = 6);

}  // namespace algebra
