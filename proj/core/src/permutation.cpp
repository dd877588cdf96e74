#include "algebra/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace algebra {

namespace {

void require_row(const std::vector<int>& row) {
  const int n = static_cast<int>(row.size());
  if (n == 0) throw std::invalid_argument("permutation must have positive degree");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : row) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v) - 1])
      throw std::invalid_argument("row is not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v) - 1] = true;
  }
}

}  // namespace

Permutation::Permutation(int degree) {
  if (degree < 1) throw std::invalid_argument("permutation must have positive degree");
  image_.resize(static_cast<std::size_t>(degree));
  std::iota(image_.begin(), image_.end(), 1);
}

Permutation Permutation::from_image(std::vector<int> image) {
  require_row(image);
  Permutation p(static_cast<int>(image.size()));
  p.image_ = std::move(image);
  return p;
}

Permutation Permutation::from_rows(const std::vector<int>& top, const std::vector<int>& bottom) {
  if (top.size() != bottom.size())
    throw std::invalid_argument("two-row form needs rows of equal length");
  require_row(top);
  require_row(bottom);
  std::vector<int> image(top.size());
  for (std::size_t k = 0; k < top.size(); ++k)
    image[static_cast<std::size_t>(top[k]) - 1] = bottom[k];
  return from_image(std::move(image));
}

Permutation Permutation::parse(std::string_view text) {
  std::string s(text);
  for (char& c : s)
    if (c == '(' || c == ')' || c == ',') c = ' ';
  auto slash = s.find('/');
  if (slash == std::string::npos)
    throw std::invalid_argument("expected two-row form \"(1 2 3 / 2 1 3)\"");
  auto read_row = [](const std::string& part) {
    std::istringstream is(part);
    std::vector<int> row;
    int v;
    while (is >> v) row.push_back(v);
    std::string rest;
    if (is.bad() || (is.clear(), is >> rest && !rest.empty()))
      throw std::invalid_argument("bad permutation row '" + part + "'");
    return row;
  };
  return from_rows(read_row(s.substr(0, slash)), read_row(s.substr(slash + 1)));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i)
    inv[static_cast<std::size_t>(image_[i]) - 1] = static_cast<int>(i) + 1;
  return from_image(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < image_.size(); ++i)
    if (image_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
  std::vector<int> image(a.image_.size());
  for (std::size_t i = 0; i < image.size(); ++i)
    image[i] = b.apply(a.image_[i]);
  return Permutation::from_image(std::move(image));
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) os << ' ';
    os << i + 1;
  }
  os << " / ";
  for (std::size_t i = 0; i < image_.size(); ++i) {
    if (i) os << ' ';
    os << image_[i];
  }
  os << ')';
  return os.str();
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw std::invalid_argument("degree must be positive");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> perms;
  do {
    perms.push_back(Permutation::from_image(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return perms;
}

CayleyTable symmetric_group_table(int n) {
  if (n < 1 || n > 5) throw std::domain_error("symmetric group table is limited to 1 <= n <= 5");
  std::vector<Permutation> perms = all_permutations(n);
  const std::size_t size = perms.size();
  std::vector<std::string> names;
  names.reserve(size);
  names.emplace_back("e");
  for (std::size_t i = 1; i < size; ++i) names.push_back("α" + std::to_string(i));

  std::vector<std::vector<std::size_t>> rows(size, std::vector<std::size_t>(size));
  auto index_of = [&](const Permutation& p) {
    auto it = std::lower_bound(perms.begin(), perms.end(), p);
    return static_cast<std::size_t>(it - perms.begin());
  };
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) rows[i][j] = index_of(perms[i] * perms[j]);
  return CayleyTable(std::move(names), std::move(rows));
}

std::vector<Permutation> stabilizer(int n, const std::set<int>& fixed) {
  for (int p : fixed)
    if (p < 1 || p > n)
      throw std::domain_error("fixed point " + std::to_string(p) + " outside 1.." +
                              std::to_string(n));
  std::vector<Permutation> result;
  for (const Permutation& p : all_permutations(n)) {
    bool keeps = true;
    for (int f : fixed)
      if (p.apply(f) != f) {
        keeps = false;
        break;
      }
    if (keeps) result.push_back(p);
  }
  return result;
}

TriangleGroup triangle_group() {
  const std::vector<std::string> names = {"β0", "β1", "β2", "β3", "β4", "β5"};
  // β0 rest, β1..β3 reflections about the vertex bisectors, β4/β5 the ±120°
  // rotations. Entry (i, j) composes motions in function order: j first, then i.
  const std::vector<std::vector<std::size_t>> rows = {
      {0, 1, 2, 3, 4, 5},
      {1, 0, 5, 4, 3, 2},
      {2, 4, 0, 5, 1, 3},
      {3, 5, 4, 0, 2, 1},
      {4, 2, 3, 1, 5, 0},
      {5, 3, 1, 2, 0, 4},
  };
  TriangleGroup tg{CayleyTable(names, rows),
                   {{"e", "β0"},
                    {"α1", "β1"},
                    {"α2", "β3"},
                    {"α3", "β4"},
                    {"α4", "β5"},
                    {"α5", "β2"}}};
  return tg;
}

}  // namespace algebra
