// Command-line front end: every subsystem as a batch subcommand with
// line-oriented "key: value" output. Exit codes: 0 success, 1 domain error,
// 2 usage error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "algebra/cayley_table.hpp"
#include "algebra/classical.hpp"
#include "algebra/classify.hpp"
#include "algebra/complex_utils.hpp"
#include "algebra/finite_map.hpp"
#include "algebra/isomorphism.hpp"
#include "algebra/permutation.hpp"
#include "algebra/quad_ext.hpp"
#include "algebra/ring.hpp"
#include "algebra/solvers.hpp"

namespace {

using namespace algebra;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* kUsage = R"usage(usage: algebra <subcommand> [args]

subcommands:
  table analyze <file>                    classify a composition table
  ring analyze <file>                     classify an add:/mul: table pair
  zmod <m> [--classify|--char|--order]    residue ring Z_m (default: print tables)
  perm compose <p1> <p2>                  two-row forms like "(1 2 3 / 2 1 3)"
  perm inverse <p>
  perm table <n>                          Cayley table of S_n (n <= 5)
  perm stabilizer <n> [pts...]            permutations fixing the listed points
  perm triangle                           triangle-motion group and its S_3 map
  ext --d <q> mul <e1> <e2>               arithmetic in Q(sqrt(d))
  ext --d <q> inv <e>
  ext --d <q> conj <e>
  ext --d <q> sqrt
  solve --degree <1..4> <coeffs...>       complex "a+bi" coefficients, highest first
  roots <n> <c>                           all n-th roots of c
  classical false-position <coeff> <b>
  classical babylonian <variant> <a> <b>  variant: sum-product | diff-product |
                                          sum-squares-plus | sum-squares-minus
  classical eliminate <file>
  map classify <file>
)usage";

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::domain_error("cannot open file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

int parse_int_arg(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + " must be an integer, got '" + s + "'");
  }
}

void print_structure(const CayleyTable& t) {
  StructureReport rep = classify_magma(t);
  std::cout << "elements: " << t.size() << '\n';
  std::cout << "groupoid: " << bool_str(rep.is_groupoid) << '\n';
  std::cout << "semigroup: " << bool_str(rep.is_semigroup) << '\n';
  std::cout << "monoid: " << bool_str(rep.is_monoid) << '\n';
  std::cout << "group: " << bool_str(rep.is_group) << '\n';
  std::cout << "abelian: " << bool_str(rep.is_abelian) << '\n';
  std::cout << "neutral: " << (rep.neutral ? t.name(*rep.neutral) : "none") << '\n';
  if (rep.non_associative_witness) {
    const auto& w = *rep.non_associative_witness;
    std::cout << "non_associative_witness: (" << t.name(w[0]) << ", " << t.name(w[1]) << ", "
              << t.name(w[2]) << ")\n";
  }
  if (rep.neutral && !rep.non_invertible.empty()) {
    std::cout << "non_invertible:";
    for (std::size_t i : rep.non_invertible) std::cout << ' ' << t.name(i);
    std::cout << '\n';
  }
}

void print_ring_report(const CayleyTable& add, const CayleyTable& mul) {
  RingReport rep = ring_classify(add, mul);
  std::cout << "elements: " << add.size() << '\n';
  std::cout << "add_abelian_group: " << bool_str(rep.add_abelian_group) << '\n';
  std::cout << "distributive: " << bool_str(rep.distributive) << '\n';
  if (rep.distributive_witness) {
    const auto& w = *rep.distributive_witness;
    std::cout << "distributive_witness: " << (w.left ? "left" : "right") << " ("
              << add.name(w.triple[0]) << ", " << add.name(w.triple[1]) << ", "
              << add.name(w.triple[2]) << ")\n";
  }
  std::cout << "associative_mul: " << bool_str(rep.associative_mul) << '\n';
  std::cout << "commutative_mul: " << bool_str(rep.commutative_mul) << '\n';
  std::cout << "unity: " << (rep.unity ? add.name(*rep.unity) : "none") << '\n';
  std::cout << "zero_divisors:";
  if (rep.zero_divisors.empty()) {
    std::cout << " none";
  } else {
    for (const auto& [x, y] : rep.zero_divisors)
      std::cout << " (" << add.name(x) << "," << add.name(y) << ")";
  }
  std::cout << '\n';
  std::cout << "integral: " << bool_str(rep.is_integral) << '\n';
  std::cout << "field: " << bool_str(rep.is_field) << '\n';
  std::cout << "characteristic: ";
  if (rep.characteristic)
    std::cout << *rep.characteristic;
  else
    std::cout << "none";
  std::cout << '\n';
}

int run_table(const std::vector<std::string>& args) {
  if (args.size() != 2 || args[0] != "analyze") throw UsageError("table expects: analyze <file>");
  print_structure(CayleyTable::parse(slurp(args[1])));
  return 0;
}

int run_ring(const std::vector<std::string>& args) {
  if (args.size() != 2 || args[0] != "analyze") throw UsageError("ring expects: analyze <file>");
  RingTables rt = parse_ring_tables(slurp(args[1]));
  print_ring_report(rt.add, rt.mul);
  return 0;
}

int run_zmod(const std::vector<std::string>& args) {
  if (args.empty() || args.size() > 2) throw UsageError("zmod expects: <m> [--classify|--char|--order]");
  unsigned long m = 0;
  try {
    std::size_t pos = 0;
    m = std::stoul(args[0], &pos);
    if (pos != args[0].size()) throw std::invalid_argument(args[0]);
  } catch (const std::exception&) {
    throw UsageError("zmod: modulus must be an integer");
  }
  RingTables rt = residue_ring(static_cast<unsigned>(m));
  if (args.size() == 1) {
    std::cout << ring_tables_to_text(rt);
    return 0;
  }
  const std::string& flag = args[1];
  if (flag == "--classify") {
    print_ring_report(rt.add, rt.mul);
  } else if (flag == "--char") {
    RingReport rep = ring_classify(rt.add, rt.mul);
    std::cout << "characteristic: " << *rep.characteristic << '\n';
  } else if (flag == "--order") {
    auto chain = find_total_order(rt.add, rt.mul);
    std::cout << "order:";
    if (!chain) {
      std::cout << " none";
    } else {
      for (std::size_t i : *chain) std::cout << ' ' << rt.add.name(i);
    }
    std::cout << '\n';
  } else {
    throw UsageError("zmod: unknown flag '" + flag + "'");
  }
  return 0;
}

int run_perm(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("perm expects a subcommand");
  const std::string& sub = args[0];
  if (sub == "compose") {
    if (args.size() != 3) throw UsageError("perm compose expects two permutations");
    std::cout << (Permutation::parse(args[1]) * Permutation::parse(args[2])).to_string() << '\n';
    return 0;
  }
  if (sub == "inverse") {
    if (args.size() != 2) throw UsageError("perm inverse expects one permutation");
    std::cout << Permutation::parse(args[1]).inverse().to_string() << '\n';
    return 0;
  }
  if (sub == "table") {
    if (args.size() != 2) throw UsageError("perm table expects a degree");
    std::cout << symmetric_group_table(parse_int_arg(args[1], "degree")).to_text();
    return 0;
  }
  if (sub == "stabilizer") {
    if (args.size() < 2) throw UsageError("perm stabilizer expects a degree");
    int n = parse_int_arg(args[1], "degree");
    std::set<int> fixed;
    for (std::size_t i = 2; i < args.size(); ++i) fixed.insert(parse_int_arg(args[i], "point"));
    for (const Permutation& p : stabilizer(n, fixed)) std::cout << p.to_string() << '\n';
    return 0;
  }
  if (sub == "triangle") {
    if (args.size() != 1) throw UsageError("perm triangle takes no arguments");
    TriangleGroup tg = triangle_group();
    std::cout << tg.table.to_text();
    for (const auto& [from, to] : tg.iso_from_s3) std::cout << "f(" << from << ") = " << to << '\n';
    return 0;
  }
  throw UsageError("perm: unknown subcommand '" + sub + "'");
}

int run_ext(const std::vector<std::string>& args) {
  if (args.size() < 3 || args[0] != "--d") throw UsageError("ext expects: --d <q> <op> [elems]");
  ExtensionField field{Rational::parse(args[1])};
  const std::string& op = args[2];
  if (op == "mul") {
    if (args.size() != 5) throw UsageError("ext mul expects two elements");
    std::cout << field.format(field.mul(field.parse(args[3]), field.parse(args[4]))) << '\n';
    return 0;
  }
  if (op == "inv") {
    if (args.size() != 4) throw UsageError("ext inv expects one element");
    std::cout << field.format(field.inverse(field.parse(args[3]))) << '\n';
    return 0;
  }
  if (op == "conj") {
    if (args.size() != 4) throw UsageError("ext conj expects one element");
    std::cout << field.format(conjugate(field.parse(args[3]))) << '\n';
    return 0;
  }
  if (op == "sqrt") {
    if (args.size() != 3) throw UsageError("ext sqrt takes no elements");
    auto [r1, r2] = field.solve_sqrt();
    std::cout << field.format(r1) << '\n' << field.format(r2) << '\n';
    return 0;
  }
  throw UsageError("ext: unknown operation '" + op + "'");
}

int run_solve(const std::vector<std::string>& args) {
  if (args.size() < 2 || args[0] != "--degree") throw UsageError("solve expects: --degree <1..4> <coeffs...>");
  int degree = parse_int_arg(args[1], "degree");
  if (degree < 1 || degree > 4) throw UsageError("solve: degree must be between 1 and 4");
  if (static_cast<int>(args.size()) != 2 + degree + 1)
    throw UsageError("solve: expected " + std::to_string(degree + 1) + " coefficients");
  std::vector<Complex> c;
  for (std::size_t i = 2; i < args.size(); ++i) c.push_back(parse_complex(args[i]));

  std::vector<Complex> roots;
  switch (degree) {
    case 1: roots = {solve_linear(c[0], c[1])}; break;
    case 2: {
      QuadraticSolution s = solve_quadratic(c[0], c[1], c[2]);
      roots.assign(s.roots.begin(), s.roots.end());
      std::sort(roots.begin(), roots.end(), root_less);
      break;
    }
    case 3: roots = solve_cubic(c[0], c[1], c[2], c[3]); break;
    default: roots = solve_quartic(c[0], c[1], c[2], c[3], c[4]); break;
  }
  for (Complex r : roots) std::cout << format_complex(r) << '\n';
  return 0;
}

int run_roots(const std::vector<std::string>& args) {
  if (args.size() != 2) throw UsageError("roots expects: <n> <c>");
  int n = parse_int_arg(args[0], "n");
  for (Complex r : solve_binomial(parse_complex(args[1]), n))
    std::cout << format_complex(r) << '\n';
  return 0;
}

int run_classical(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("classical expects a subcommand");
  const std::string& sub = args[0];
  if (sub == "false-position") {
    if (args.size() != 3) throw UsageError("classical false-position expects <coeff> <b>");
    FalsePositionResult r = false_position(Rational::parse(args[1]), Rational::parse(args[2]));
    std::cout << "trial: " << r.trial << '\n';
    std::cout << "evaluation: " << r.evaluation << '\n';
    std::cout << "ratio: " << r.ratio << '\n';
    std::cout << "answer: " << r.solution << '\n';
    return 0;
  }
  if (sub == "babylonian") {
    if (args.size() != 4) throw UsageError("classical babylonian expects <variant> <a> <b>");
    Rational a = Rational::parse(args[2]);
    Rational b = Rational::parse(args[3]);
    BabylonianResult r;
    const std::string& variant = args[1];
    if (variant == "sum-product")
      r = babylonian_sum_product(a, b);
    else if (variant == "diff-product")
      r = babylonian_diff_product(a, b);
    else if (variant == "sum-squares-plus")
      r = babylonian_sum_of_squares(SquareSign::plus, a, b);
    else if (variant == "sum-squares-minus")
      r = babylonian_sum_of_squares(SquareSign::minus, a, b);
    else
      throw UsageError("classical babylonian: unknown variant '" + variant + "'");
    if (r.exact) {
      std::cout << "x: " << r.exact_values->first << '\n';
      std::cout << "y: " << r.exact_values->second << '\n';
    } else {
      std::cout << "x: " << format_complex(r.x) << '\n';
      std::cout << "y: " << format_complex(r.y) << '\n';
    }
    std::cout << "exact: " << bool_str(r.exact) << '\n';
    return 0;
  }
  if (sub == "eliminate") {
    if (args.size() != 2) throw UsageError("classical eliminate expects <file>");
    EliminationResult r = eliminate(parse_system(slurp(args[1])));
    std::cout << "kind: "
              << (r.kind == SolutionKind::unique
                      ? "unique"
                      : r.kind == SolutionKind::inconsistent ? "inconsistent" : "underdetermined")
              << '\n';
    std::cout << "rank: " << r.rank << '\n';
    if (r.kind == SolutionKind::unique) {
      std::cout << "solution:";
      for (const Rational& v : r.solution) std::cout << ' ' << v;
      std::cout << '\n';
    }
    return 0;
  }
  throw UsageError("classical: unknown subcommand '" + sub + "'");
}

int run_map(const std::vector<std::string>& args) {
  if (args.size() != 2 || args[0] != "classify") throw UsageError("map expects: classify <file>");
  MapClassification c = classify_map(parse_map(slurp(args[1])));
  std::cout << "injective: " << bool_str(c.injective) << '\n';
  std::cout << "surjective: " << bool_str(c.surjective) << '\n';
  std::cout << "bijective: " << bool_str(c.bijective) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    if (args.empty()) throw UsageError("missing subcommand");
    std::string cmd = args.front();
    std::vector<std::string> rest(args.begin() + 1, args.end());
    if (cmd == "table") return run_table(rest);
    if (cmd == "ring") return run_ring(rest);
    if (cmd == "zmod") return run_zmod(rest);
    if (cmd == "perm") return run_perm(rest);
    if (cmd == "ext") return run_ext(rest);
    if (cmd == "solve") return run_solve(rest);
    if (cmd == "roots") return run_roots(rest);
    if (cmd == "classical") return run_classical(rest);
    if (cmd == "map") return run_map(rest);
    throw UsageError("unknown subcommand '" + cmd + "'");
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n\n" << kUsage;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
