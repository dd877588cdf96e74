#include "algebra/finite_map.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace algebra {

MapClassification classify_map(const FiniteMap& f) {
  if (f.image.size() != f.domain_size) throw std::invalid_argument("image length != domain size");
  std::vector<unsigned> hits(f.codomain_size, 0);
  for (std::size_t v : f.image) {
    if (v >= f.codomain_size) throw std::invalid_argument("image value out of codomain");
    ++hits[v];
  }
  bool injective = true, surjective = true;
  for (unsigned h : hits) {
    if (h > 1) injective = false;
    if (h == 0) surjective = false;
  }
  return {injective, surjective, injective && surjective};
}

FiniteMap parse_map(std::string_view text) {
  std::string cleaned;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      if (i == text.size()) break;
    }
    cleaned += text[i];
  }
  std::istringstream is{cleaned};
  std::string key;
  FiniteMap f;
  bool have_domain = false, have_codomain = false;
  while (is >> key) {
    if (key == "domain:") {
      if (!(is >> f.domain_size)) throw std::invalid_argument("bad domain size");
      have_domain = true;
    } else if (key == "codomain:") {
      if (!(is >> f.codomain_size)) throw std::invalid_argument("bad codomain size");
      have_codomain = true;
    } else if (key == "image:") {
      if (!have_domain || !have_codomain)
        throw std::invalid_argument("image: must follow domain: and codomain:");
      for (std::size_t i = 0; i < f.domain_size; ++i) {
        long long v;
        if (!(is >> v)) throw std::invalid_argument("image list too short");
        if (v < 1 || static_cast<std::size_t>(v) > f.codomain_size)
          throw std::invalid_argument("image value " + std::to_string(v) + " out of codomain");
        f.image.push_back(static_cast<std::size_t>(v - 1));
      }
    } else {
      throw std::invalid_argument("unexpected token '" + key + "' in map file");
    }
  }
  if (!have_domain || !have_codomain) throw std::invalid_argument("missing domain:/codomain: line");
  if (f.domain_size == 0 || f.codomain_size == 0)
    throw std::invalid_argument("domain and codomain must be non-empty");
  if (f.image.size() != f.domain_size) throw std::invalid_argument("missing image: line");
  return f;
}

}  // namespace algebra
