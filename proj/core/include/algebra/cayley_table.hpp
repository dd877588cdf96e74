#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace algebra {

/// Parse failure with a 1-based source location.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

/// Composition table of a finite magma: entry (i, j) is the index of
/// x_i * x_j. Closure holds by construction, nothing else is assumed.
class CayleyTable {
public:
  CayleyTable(std::vector<std::string> elements, std::vector<std::vector<std::size_t>> rows);

  /// Text format: a line "elements: a b c ...", then n rows of n names,
  /// row i column j naming x_i * x_j. '#' starts a comment.
  static CayleyTable parse(std::string_view text);
  std::string to_text() const;

  std::size_t size() const { return elements_.size(); }
  std::size_t apply(std::size_t i, std::size_t j) const { return grid_[i * size() + j]; }
  const std::string& name(std::size_t i) const { return elements_[i]; }
  const std::vector<std::string>& elements() const { return elements_; }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t require(std::string_view name) const;  // throws on unknown element

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.elements_ == b.elements_ && a.grid_ == b.grid_;
  }

private:
  std::vector<std::string> elements_;
  std::vector<std::size_t> grid_;  // row-major n*n
  std::unordered_map<std::string, std::size_t> index_;
};

struct RingTables {
  CayleyTable add;
  CayleyTable mul;
};

/// Ring file: an "add:" section followed by a "mul:" section, each wrapping a
/// table in the format above over the same element list.
RingTables parse_ring_tables(std::string_view text);
std::string ring_tables_to_text(const RingTables& rt);

}  // namespace algebra
