#include "algebra/quad_ext.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace algebra {

ExtensionField::ExtensionField(Rational d) : d_(std::move(d)) {
  if (sqrt_exact(d_))
    throw std::domain_error("d = " + d_.str() +
                            " is the square of a rational; the pairs would not form a field");
}

QuadExtElem ExtensionField::add(const QuadExtElem& a, const QuadExtElem& b) const {
  return {a.x + b.x, a.y + b.y};
}

QuadExtElem ExtensionField::sub(const QuadExtElem& a, const QuadExtElem& b) const {
  return {a.x - b.x, a.y - b.y};
}

QuadExtElem ExtensionField::mul(const QuadExtElem& a, const QuadExtElem& b) const {
  return {a.x * b.x + d_ * a.y * b.y, a.x * b.y + a.y * b.x};
}

QuadExtElem ExtensionField::inverse(const QuadExtElem& a) const {
  if (a.is_zero()) throw std::domain_error("zero has no inverse");
  Rational den = a.x * a.x - d_ * a.y * a.y;  // nonzero: d is not a rational square
  return {a.x / den, -a.y / den};
}

std::pair<QuadExtElem, QuadExtElem> ExtensionField::solve_sqrt() const {
  return {QuadExtElem{0, 1}, QuadExtElem{0, -1}};
}

std::string ExtensionField::format(const QuadExtElem& a) const {
  const std::string root = "sqrt(" + d_.str() + ")";
  if (a.y.is_zero()) return a.x.str();
  std::string yterm = a.y.abs() == Rational(1) ? root : a.y.abs().str() + "*" + root;
  if (a.x.is_zero()) return (a.y.sign() < 0 ? "-" : "") + yterm;
  return a.x.str() + (a.y.sign() < 0 ? "-" : "+") + yterm;
}

QuadExtElem ExtensionField::parse(std::string_view text) const {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty extension element");

  // Split into at most two signed terms; '+'/'-' inside sqrt(...) or at the
  // start of a term do not split.
  std::vector<std::string> terms;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == '+' || c == '-') && depth == 0 && i > start) {
      terms.push_back(s.substr(start, i - start));
      start = i;
    }
  }
  terms.push_back(s.substr(start));
  if (terms.size() > 2) throw std::invalid_argument("too many terms in '" + std::string(text) + "'");

  QuadExtElem out{0, 0};
  bool saw_rational = false, saw_root = false;
  for (std::string term : terms) {
    Rational sign = 1;
    if (!term.empty() && (term[0] == '+' || term[0] == '-')) {
      if (term[0] == '-') sign = -1;
      term.erase(0, 1);
    }
    auto root_at = term.find("sqrt(");
    if (root_at == std::string::npos) {
      if (saw_rational) throw std::invalid_argument("two rational terms in '" + std::string(text) + "'");
      out.x = sign * Rational::parse(term);
      saw_rational = true;
      continue;
    }
    if (saw_root) throw std::invalid_argument("two root terms in '" + std::string(text) + "'");
    if (term.back() != ')') throw std::invalid_argument("unterminated sqrt in '" + std::string(text) + "'");
    std::string radicand = term.substr(root_at + 5, term.size() - root_at - 6);
    if (Rational::parse(radicand) != d_)
      throw std::invalid_argument("radicand " + radicand + " does not match the field's d = " +
                                  d_.str());
    Rational coeff = 1;
    if (root_at > 0) {
      if (term[root_at - 1] != '*')
        throw std::invalid_argument("expected '*' before sqrt in '" + std::string(text) + "'");
      coeff = Rational::parse(term.substr(0, root_at - 1));
    }
    out.y = sign * coeff;
    saw_root = true;
  }
  return out;
}

}  // namespace algebra
