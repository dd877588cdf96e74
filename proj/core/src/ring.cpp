#include "algebra/ring.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "algebra/classify.hpp"

namespace algebra {

RingTables residue_ring(unsigned m) {
  if (m < 2) throw std::domain_error("residue ring requires modulus >= 2");
  std::vector<std::string> names;
  names.reserve(m);
  for (unsigned i = 0; i < m; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<std::size_t>> add(m, std::vector<std::size_t>(m));
  std::vector<std::vector<std::size_t>> mul(m, std::vector<std::size_t>(m));
  for (unsigned i = 0; i < m; ++i)
    for (unsigned j = 0; j < m; ++j) {
      add[i][j] = (i + j) % m;
      mul[i][j] = (static_cast<unsigned long long>(i) * j) % m;
    }
  return {CayleyTable(names, std::move(add)), CayleyTable(std::move(names), std::move(mul))};
}

RingReport ring_classify(const CayleyTable& add, const CayleyTable& mul) {
  if (add.elements() != mul.elements()) throw std::domain_error("element-list mismatch");
  const std::size_t n = add.size();
  RingReport rep;

  StructureReport add_rep = classify_magma(add);
  rep.add_abelian_group = add_rep.is_group && add_rep.is_abelian;
  rep.zero = add_rep.neutral;

  rep.distributive = true;
  for (std::size_t x = 0; x < n && rep.distributive; ++x)
    for (std::size_t y = 0; y < n && rep.distributive; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        if (mul.apply(x, add.apply(y, z)) != add.apply(mul.apply(x, y), mul.apply(x, z))) {
          rep.distributive = false;
          rep.distributive_witness = DistributivityWitness{{x, y, z}, true};
          break;
        }
        if (mul.apply(add.apply(y, z), x) != add.apply(mul.apply(y, x), mul.apply(z, x))) {
          rep.distributive = false;
          rep.distributive_witness = DistributivityWitness{{x, y, z}, false};
          break;
        }
      }

  rep.associative_mul = !check_associative(mul).has_value();
  rep.commutative_mul = true;
  for (std::size_t x = 0; x < n && rep.commutative_mul; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (mul.apply(x, y) != mul.apply(y, x)) {
        rep.commutative_mul = false;
        break;
      }

  rep.unity = find_neutral(mul).neutral;

  if (rep.zero) {
    const std::size_t zero = *rep.zero;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != zero && y != zero && mul.apply(x, y) == zero) rep.zero_divisors.emplace_back(x, y);
  }

  if (rep.unity && rep.zero && rep.add_abelian_group) rep.characteristic = characteristic(add, *rep.unity);

  const bool ring_base = rep.add_abelian_group && rep.distributive;
  rep.is_integral = ring_base && rep.associative_mul && rep.commutative_mul && rep.unity &&
                    rep.zero && *rep.unity != *rep.zero && rep.zero_divisors.empty();

  rep.is_field = false;
  if (rep.is_integral) {
    // remaining field condition: every nonzero element invertible
    bool all_invertible = true;
    for (std::size_t x = 0; x < n && all_invertible; ++x) {
      if (x == *rep.zero) continue;
      if (!inverse_in(mul, *rep.unity, x)) all_invertible = false;
    }
    rep.is_field = all_invertible;
  }
  return rep;
}

unsigned characteristic(const CayleyTable& add, std::size_t unity) {
  auto zero = find_neutral(add).neutral;
  if (!zero) throw std::domain_error("characteristic requires an additive neutral");
  std::size_t acc = unity;
  unsigned p = 1;
  while (acc != *zero) {
    // in a group the order of an element divides the table size
    if (p > add.size()) throw std::domain_error("characteristic requires an additive group");
    acc = add.apply(acc, unity);
    ++p;
  }
  return p;
}

std::optional<std::vector<std::size_t>> find_total_order(const CayleyTable& add,
                                                         const CayleyTable& mul,
                                                         std::size_t max_n) {
  if (add.elements() != mul.elements()) throw std::domain_error("element-list mismatch");
  const std::size_t n = add.size();
  if (n > max_n)
    throw std::domain_error("total-order search is limited to tables of size <= " +
                            std::to_string(max_n));
  auto zero_opt = find_neutral(add).neutral;
  if (!zero_opt) throw std::domain_error("total-order search requires an additive neutral");
  const std::size_t zero = *zero_opt;

  std::vector<std::size_t> chain(n);
  std::iota(chain.begin(), chain.end(), 0);
  std::vector<std::size_t> pos(n);
  do {
    for (std::size_t i = 0; i < n; ++i) pos[chain[i]] = i;
    auto le = [&](std::size_t x, std::size_t y) { return pos[x] <= pos[y]; };

    bool ok = true;
    // x <= y implies x+z <= y+z
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (!le(x, y)) continue;
        for (std::size_t z = 0; z < n; ++z)
          if (!le(add.apply(x, z), add.apply(y, z))) {
            ok = false;
            break;
          }
      }
    // 0 <= x and 0 <= y imply 0 <= xy
    for (std::size_t x = 0; x < n && ok; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (le(zero, x) && le(zero, y) && !le(zero, mul.apply(x, y))) {
          ok = false;
          break;
        }
      }
    if (ok) return chain;
  } while (std::next_permutation(chain.begin(), chain.end()));
  return std::nullopt;
}

}  // namespace algebra
