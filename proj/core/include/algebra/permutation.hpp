#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "algebra/cayley_table.hpp"

namespace algebra {

/// Bijection of {1..n} in two-row form. Composition reads left to right:
/// (a*b)(i) = b(a(i)), so the left factor acts first.
class Permutation {
public:
  explicit Permutation(int degree);  // identity
  static Permutation from_image(std::vector<int> image);
  /// The permutation sending top[k] -> bottom[k]; column order irrelevant.
  static Permutation from_rows(const std::vector<int>& top, const std::vector<int>& bottom);
  /// Two-row text form "(1 2 3 / 2 1 3)".
  static Permutation parse(std::string_view text);

  int degree() const { return static_cast<int>(image_.size()); }
  int apply(int i) const { return image_[static_cast<std::size_t>(i) - 1]; }  // 1-based
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// a * b applies a first, then b.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.image_ < b.image_;
  }

  std::string to_string() const;  // canonical top row 1..n

private:
  std::vector<int> image_;  // image_[i] = value of i+1; a permutation of 1..n
};

/// All n! permutations in lexicographic order of their image rows
/// (the identity first).
std::vector<Permutation> all_permutations(int n);

/// Cayley table of S_n under left-to-right composition, 1 <= n <= 5.
/// Elements are named "e", "α1", "α2", ... in lexicographic order of their
/// image rows.
CayleyTable symmetric_group_table(int n);

/// All permutations of degree n fixing every listed point; (n-k)! of them.
std::vector<Permutation> stabilizer(int n, const std::set<int>& fixed);

/// The group of the six motions of an equilateral triangle (rest, three
/// reflections, two rotations), tabulated in function-composition order,
/// plus a bijection witnessing its isomorphism with S_3.
struct TriangleGroup {
  CayleyTable table;  // over β0..β5
  std::vector<std::pair<std::string, std::string>> iso_from_s3;  // ("e","β0"), ("α1","β1"), ...
};
TriangleGroup triangle_group();

}  // namespace algebra
