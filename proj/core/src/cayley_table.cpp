#include "algebra/cayley_table.hpp"

#include <cctype>
#include <sstream>

namespace algebra {

namespace {

struct Token {
  std::string text;
  std::size_t line;    // 1-based
  std::size_t column;  // 1-based
};

// Whitespace-separated tokens with source locations; '#' cuts a line short.
std::vector<std::vector<Token>> tokenize_lines(std::string_view text) {
  std::vector<std::vector<Token>> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::vector<Token> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      toks.push_back({std::string(line.substr(i, j - i)), line_no, i + 1});
      i = j;
    }
    if (!toks.empty()) lines.push_back(std::move(toks));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

CayleyTable parse_lines(const std::vector<std::vector<Token>>& lines) {
  if (lines.empty()) throw ParseError(1, 1, "empty table");
  const auto& header = lines.front();
  if (header.front().text != "elements:")
    throw ParseError(header.front().line, header.front().column, "expected 'elements:' header");
  if (header.size() < 2)
    throw ParseError(header.front().line, header.front().column, "no element names");

  std::vector<std::string> elements;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t k = 1; k < header.size(); ++k) {
    const Token& t = header[k];
    if (!index.emplace(t.text, elements.size()).second)
      throw ParseError(t.line, t.column, "duplicate element name '" + t.text + "'");
    elements.push_back(t.text);
  }
  const std::size_t n = elements.size();
  if (lines.size() - 1 != n) {
    const Token& at = lines.back().front();
    throw ParseError(at.line, at.column,
                     "expected " + std::to_string(n) + " rows, got " +
                         std::to_string(lines.size() - 1));
  }
  std::vector<std::vector<std::size_t>> rows;
  for (std::size_t r = 1; r <= n; ++r) {
    const auto& toks = lines[r];
    if (toks.size() != n)
      throw ParseError(toks.front().line, toks.front().column,
                       "expected " + std::to_string(n) + " entries in row, got " +
                           std::to_string(toks.size()));
    std::vector<std::size_t> row;
    for (const Token& t : toks) {
      auto it = index.find(t.text);
      if (it == index.end())
        throw ParseError(t.line, t.column, "unknown symbol '" + t.text + "'");
      row.push_back(it->second);
    }
    rows.push_back(std::move(row));
  }
  return CayleyTable(std::move(elements), std::move(rows));
}

}  // namespace

CayleyTable::CayleyTable(std::vector<std::string> elements,
                         std::vector<std::vector<std::size_t>> rows)
    : elements_(std::move(elements)) {
  const std::size_t n = elements_.size();
  if (n == 0) throw std::invalid_argument("table must have at least one element");
  for (std::size_t i = 0; i < n; ++i) {
    if (!index_.emplace(elements_[i], i).second)
      throw std::invalid_argument("duplicate element name '" + elements_[i] + "'");
  }
  if (rows.size() != n) throw std::invalid_argument("row count does not match element count");
  grid_.reserve(n * n);
  for (const auto& row : rows) {
    if (row.size() != n) throw std::invalid_argument("column count does not match element count");
    for (std::size_t v : row) {
      if (v >= n) throw std::invalid_argument("table entry out of range");
      grid_.push_back(v);
    }
  }
}

CayleyTable CayleyTable::parse(std::string_view text) { return parse_lines(tokenize_lines(text)); }

std::string CayleyTable::to_text() const {
  std::ostringstream os;
  os << "elements:";
  for (const auto& e : elements_) os << ' ' << e;
  os << '\n';
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) os << ' ';
      os << elements_[apply(i, j)];
    }
    os << '\n';
  }
  return os.str();
}

std::optional<std::size_t> CayleyTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t CayleyTable::require(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::domain_error("unknown element '" + std::string(name) + "'");
  return *i;
}

RingTables parse_ring_tables(std::string_view text) {
  auto lines = tokenize_lines(text);
  std::size_t add_at = lines.size(), mul_at = lines.size();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() == 1 && lines[i][0].text == "add:") add_at = i;
    if (lines[i].size() == 1 && lines[i][0].text == "mul:") mul_at = i;
  }
  if (add_at >= lines.size()) throw ParseError(1, 1, "missing 'add:' section");
  if (mul_at >= lines.size() || mul_at < add_at)
    throw ParseError(1, 1, "missing 'mul:' section after 'add:'");

  std::vector<std::vector<Token>> add_lines(lines.begin() + add_at + 1, lines.begin() + mul_at);
  std::vector<std::vector<Token>> mul_lines(lines.begin() + mul_at + 1, lines.end());
  CayleyTable add = parse_lines(add_lines);
  CayleyTable mul = parse_lines(mul_lines);
  if (add.elements() != mul.elements()) {
    const Token& at = mul_lines.front().front();
    throw ParseError(at.line, at.column, "element-list mismatch between add: and mul: sections");
  }
  return {std::move(add), std::move(mul)};
}

std::string ring_tables_to_text(const RingTables& rt) {
  return "add:\n" + rt.add.to_text() + "mul:\n" + rt.mul.to_text();
}

}  // namespace algebra
