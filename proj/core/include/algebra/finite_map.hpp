#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

namespace algebra {

/// Map {1..m} -> {1..n} given by its image list (0-based internally).
struct FiniteMap {
  std::size_t domain_size = 0;
  std::size_t codomain_size = 0;
  std::vector<std::size_t> image;  // image[i] in [0, codomain_size)
};

struct MapClassification {
  bool injective;
  bool surjective;
  bool bijective;
};

MapClassification classify_map(const FiniteMap& f);

/// Text format (1-based values):
///   domain: 5
///   codomain: 6
///   image: 3 3 4 4 3
/// '#' starts a comment.
FiniteMap parse_map(std::string_view text);

}  // namespace algebra
