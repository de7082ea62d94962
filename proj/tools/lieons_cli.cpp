#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "lieons/classical.hpp"
#include "lieons/clusters.hpp"
#include "lieons/io.hpp"
#include "lieons/scheme.hpp"

using namespace lieons;

namespace {

constexpr int kOk = 0, kNegative = 1, kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json read_json(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string theta_str(const Vec& theta) {
  if (is_zero(theta)) return "0";
  std::string s = "(";
  for (std::size_t a = 0; a < theta.size(); ++a) s += (a ? "," : "") + theta[a].get_str();
  return s + ")";
}

int emit_scheme(const AScheme& s) {
  auto problems = verify_scheme(s);
  if (!problems.empty()) {
    std::cerr << "scheme failed verification: " << problems.front() << "\n";
    return kNegative;
  }
  std::cout << to_json(s).dump(2) << "\n";
  return kOk;
}

int cmd_check(const std::string& input) {
  auto g = structure_from_json(read_json(input));
  if (!is_jacobi(g)) {
    std::cout << "jacobi: FAIL\ndefect: " << jacobi_defect(g).str() << "\n";
    return kNegative;
  }
  std::cout << "jacobi: ok, theta: " << theta_str(modular_vector(g)) << ", rank: " << lie_rank(g)
            << ", lieon: " << recognize_lieon(g).str() << "\n";
  return kOk;
}

int cmd_compat(const std::string& a, const std::string& b) {
  auto g = structure_from_json(read_json(a));
  auto h = structure_from_json(read_json(b));
  if (g.dim() != h.dim()) throw UsageError("dimension mismatch");
  auto defect = compatibility_defect(g, h);
  if (defect.is_zero()) {
    std::cout << "compatible\n";
    return kOk;
  }
  std::cout << "incompatible\ndefect: " << defect.str() << "\n";
  return kNegative;
}

int cmd_disassemble(const std::string& input, const std::string& mode) {
  auto g = structure_from_json(read_json(input));
  if (!is_jacobi(g)) {
    std::cerr << "not a Lie structure\n";
    return kNegative;
  }
  if (mode == "solvable") {
    if (!is_solvable(g)) {
      std::cerr << "not solvable\n";
      return kNegative;
    }
    return emit_scheme(disassemble_solvable(g));
  }
  auto split = modular_split(g);
  if (split.non.is_abelian()) {
    std::cerr << "unimodular: nothing to split\n";
    return kNegative;
  }
  return emit_scheme(node_of(g, {leaf(split.uni, "uni"), leaf(split.non, "non")}, "g"));
}

int cmd_classical(const std::string& kind, int n, const std::vector<std::string>& params,
                  const std::string& lambda) {
  ClassicalSpec spec{parse_kind(kind), n, {}, {}};
  for (const auto& p : params) spec.params.push_back(parse_rational(p));
  if (spec.kind == ClassicalKind::so && spec.params.empty()) spec.params.assign(n, 1);
  if (!lambda.empty()) spec.lambda = parse_rational(lambda);
  return emit_scheme(canonical_scheme(spec));
}

int cmd_clusters(int n, const std::string& format, bool dees_only) {
  if (n < 1 || n > kMaxClusterDim) throw UsageError("n must lie in 1.." + std::to_string(kMaxClusterDim));
  auto list = dees_only ? enumerate_dee_clusters(n) : enumerate_clusters(n);
  if (format == "dot") {
    for (std::size_t a = 0; a < list.size(); ++a) std::cout << to_dot(list[a], "cluster" + std::to_string(a + 1));
    return kOk;
  }
  Json out = Json::array();
  for (const auto& f : list)
    out.push_back({{"family", to_json(f)}, {"card", is_cluster(f) ? to_json(compute_card(f)) : Json(nullptr)}});
  std::cout << out.dump(2) << "\n";
  return kOk;
}

int cmd_card(const std::string& input, const std::string& format) {
  auto f = family_from_json(read_json(input));
  if (!family_is_compatible(f)) {
    std::cerr << "incompatible family\n";
    return kNegative;
  }
  if (!is_cluster(f)) {
    std::cerr << "not a cluster\n";
    return kNegative;
  }
  if (format == "dot") {
    std::cout << to_dot(f);
    return kOk;
  }
  Json types = Json::object();
  for (const auto& [v, t] : vertex_types(f)) types[std::to_string(v)] = to_string(t);
  Json roles = Json::object();
  for (const auto& [v, r] : vertex_roles(f)) roles[std::to_string(v)] = r;
  std::cout << Json{{"card", to_json(compute_card(f))}, {"vertex_types", types}, {"roles", roles}}.dump(2) << "\n";
  return kOk;
}

int cmd_synth(const std::string& input, std::optional<unsigned> seed) {
  Json doc = read_json(input);
  auto f = family_from_json(doc);
  if (!family_is_compatible(f)) {
    std::cerr << "incompatible family\n";
    return kNegative;
  }
  auto coeffs = family_coeffs(f);
  if (seed && !doc.contains("coeffs")) {
    std::mt19937 rng(*seed);
    std::uniform_int_distribution<int> d(1, 3);
    std::bernoulli_distribution sign(0.5);
    for (auto& c : coeffs) c = Rational(sign(rng) ? d(rng) : -d(rng));
  }
  std::cout << to_json(synthesize(f, coeffs)).dump(2) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie structure disassembling and coaxial clusters"};
  app.require_subcommand(1);
  std::string input, format = "json", mode, kind, lambda, other;
  std::vector<std::string> params;
  std::optional<unsigned> seed;
  int n = 0;
  bool dees_only = false;

  auto add_input = [&](CLI::App* c) { c->add_option("--input,-i", input, "JSON file (default stdin)"); };
  auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "dot"}));
  };

  auto* check = app.add_subcommand("check", "Jacobi, modular vector, rank and lieon type of a structure");
  add_input(check);
  auto* compat = app.add_subcommand("compat", "compatibility of two structures");
  compat->add_option("first", input, "first structure (- for stdin)")->required();
  compat->add_option("second", other, "second structure")->required();
  auto* dis = app.add_subcommand("disassemble", "emit a verified a-scheme");
  add_input(dis);
  dis->add_option("--mode", mode, "solvable or modular-split")
      ->required()
      ->check(CLI::IsMember({"solvable", "modular-split"}));
  auto* cls = app.add_subcommand("classical", "canonical scheme of a classical algebra");
  cls->add_option("kind", kind, "so, sp, gl, sl, u or su")->required();
  cls->add_option("n", n, "rank parameter (sp n is sp(2n))")->required();
  cls->add_option("--params", params, "so coefficients a_1..a_n")->delimiter(',');
  cls->add_option("--lambda", lambda, "dressing scale for gl, sl, u, su");
  auto* clu = app.add_subcommand("clusters", "enumerate clusters on n vertices");
  clu->add_option("n", n, "number of vertices")->required();
  clu->add_flag("--dees-only", dees_only, "restrict to dee families");
  add_format(clu);
  auto* crd = app.add_subcommand("card", "card of a cluster family");
  add_input(crd);
  add_format(crd);
  auto* syn = app.add_subcommand("synth", "coaxial Lie structure of a compatible family");
  add_input(syn);
  syn->add_option("--seed", seed, "random nonzero coefficients when the family has none");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*check) return cmd_check(input);
    if (*compat) return cmd_compat(input, other);
    if (*dis) return cmd_disassemble(input, mode);
    if (*cls) return cmd_classical(kind, n, params, lambda);
    if (*clu) return cmd_clusters(n, format, dees_only);
    if (*crd) return cmd_card(input, format);
    if (*syn) return cmd_synth(input, seed);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNegative;
  }
  return kUsage;
}
