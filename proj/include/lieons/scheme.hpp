#pragma once

#include <map>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lie.hpp"
#include "lieon.hpp"

namespace lieons {

struct AScheme {
  LieStructure node;
  std::vector<AScheme> children;
  std::string label;
  bool flagged = false;  // explicitly marked abelian node

  bool is_leaf() const { return children.empty(); }

  std::size_t leaf_count() const {
    if (is_leaf()) return 1;
    std::size_t n = 0;
    for (const auto& c : children) n += c.leaf_count();
    return n;
  }
  std::size_t depth() const {
    std::size_t d = 0;
    for (const auto& c : children) d = std::max(d, c.depth());
    return is_leaf() ? 0 : d + 1;
  }
  template <class F>
  void for_each_leaf(F&& f) const {
    if (is_leaf()) {
      f(*this);
      return;
    }
    for (const auto& c : children) c.for_each_leaf(f);
  }
};

inline AScheme leaf(LieStructure g, std::string label) {
  bool ab = g.is_abelian();
  return AScheme{std::move(g), {}, std::move(label), ab};
}

// Node with the given children; a single child replaces the node.
inline AScheme node_of(LieStructure g, std::vector<AScheme> children, std::string label) {
  if (children.size() == 1) {
    children[0].label = label.empty() ? children[0].label : label + "/" + children[0].label;
    return std::move(children[0]);
  }
  return AScheme{std::move(g), std::move(children), std::move(label), false};
}

namespace detail {

inline void verify_node(const AScheme& s, const std::string& path, bool is_root, std::vector<std::string>& out) {
  if (s.is_leaf()) {
    if (s.node.is_abelian() && !s.flagged && !is_root) out.push_back(path + ": zero leaf");
    return;
  }
  LieStructure total(s.node.dim());
  for (std::size_t a = 0; a < s.children.size(); ++a) {
    const auto& c = s.children[a];
    if (c.node.dim() != s.node.dim()) {
      out.push_back(path + ": child " + std::to_string(a) + " has wrong dimension");
      return;
    }
    total += c.node;
    if (!is_jacobi(c.node)) out.push_back(path + ": child " + std::to_string(a) + " fails Jacobi");
  }
  for (std::size_t a = 0; a < s.children.size(); ++a)
    for (std::size_t b = a + 1; b < s.children.size(); ++b)
      if (!compatible(s.children[a].node, s.children[b].node))
        out.push_back(path + ": children " + std::to_string(a) + "," + std::to_string(b) + " incompatible");
  if (!(total == s.node)) out.push_back(path + ": children do not sum to node");
  for (std::size_t a = 0; a < s.children.size(); ++a)
    verify_node(s.children[a], path + "/" + std::to_string(a), false, out);
}

}  // namespace detail

inline std::vector<std::string> verify_scheme(const AScheme& s) {
  std::vector<std::string> out;
  if (!is_jacobi(s.node)) out.push_back("root: jacobi defect is nonzero");
  detail::verify_node(s, "root", true, out);
  return out;
}

inline bool is_complete(const AScheme& s) {
  bool ok = true;
  s.for_each_leaf([&](const AScheme& l) {
    if (l.node.is_abelian() || !is_jacobi(l.node) || !recognize_lieon(l.node).is_lieon()) ok = false;
  });
  return ok;
}

// Columns: the vectors of each block in order.
inline Mat block_basis(const std::vector<Basis>& blocks, int n) {
  Basis all;
  for (const auto& b : blocks) all.insert(all.end(), b.begin(), b.end());
  if (static_cast<int>(all.size()) != n || rank(all) != all.size())
    throw std::invalid_argument("subspaces are not complementary");
  return from_columns(all, n);
}

// g = (g0 +_rho |h|) + (gamma_m + h) for g = g0 + h with h an ideal.
inline std::pair<LieStructure, LieStructure> split_semidirect(const LieStructure& g, const Basis& ideal,
                                                             const Basis& subalg) {
  const int n = g.dim();
  if (!is_ideal(g, ideal)) throw std::invalid_argument("split_semidirect: not an ideal");
  if (!is_subalgebra(g, subalg)) throw std::invalid_argument("split_semidirect: not a subalgebra");
  Mat t = block_basis({subalg, ideal}, n);
  const int m = static_cast<int>(subalg.size());
  auto in_ideal = [m](int a) { return a > m; };
  auto action = filter_in_basis(g, t, [&](int a, int b, int) { return !(in_ideal(a) && in_ideal(b)); });
  auto inner = filter_in_basis(g, t, [&](int a, int b, int) { return in_ideal(a) && in_ideal(b); });
  return {action, inner};
}

namespace detail {

// Picks a codim-1 subspace s of u containing d and a vector nu of u outside s acting nontrivially.
inline std::pair<Basis, Vec> solvable_step(const LieStructure& g, const Basis& u, const Basis& d) {
  const int n = g.dim();
  Vec nu;
  for (const auto& v : u) {
    if (in_span(d, v)) continue;
    bool central = true;
    for (const auto& w : u)
      if (!is_zero(bracket(g, v, w))) {
        central = false;
        break;
      }
    if (!central) {
      nu = v;
      break;
    }
  }
  if (nu.empty()) throw std::logic_error("no non-central vector outside the derived algebra");
  Basis s = d;
  for (const auto& v : u) {
    if (s.size() + 1 == u.size()) break;
    Basis trial = s;
    trial.push_back(v);
    if (rank(trial) != trial.size()) continue;
    Basis with_nu = trial;
    with_nu.push_back(nu);
    if (rank(with_nu) != with_nu.size()) continue;
    s = std::move(trial);
  }
  return {adapted_basis(s, n), nu};
}

// Structure with [nu, b_i] = a b_j in the basis (nu, s, rest), zero on everything else.
inline LieStructure gamma_entry(const Mat& tinv, int n, int i, int j, const Rational& a) {
  LieStructure adapted(n);
  adapted.add(1, i + 2, j + 2, a);
  return change_basis(adapted, tinv);
}

// h is supported on u x u; c spans a complement of u made of central vectors.
inline AScheme solvable_rec(const LieStructure& h, const Basis& u, const Basis& c, int& counter) {
  const int n = h.dim();
  Basis d = derived_of(h, u);
  if (d.empty()) return leaf(h, "abelian");
  auto [s, nu] = solvable_step(h, u, d);
  Basis full{nu};
  full.insert(full.end(), s.begin(), s.end());
  full.insert(full.end(), c.begin(), c.end());
  Mat tinv = inverse(from_columns(full, n));
  Mat a = zeros(s.size(), s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    Vec coords = coordinates(s, bracket(h, nu, s[i]));
    for (std::size_t j = 0; j < s.size(); ++j) a[j][i] = coords[j];
  }
  std::vector<AScheme> gamma_leaves;
  LieStructure gamma_sum(n);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (a[j][i] == 0) continue;
      auto l = gamma_entry(tinv, n, static_cast<int>(i), static_cast<int>(j), a[j][i]);
      gamma_sum += l;
      gamma_leaves.push_back(leaf(l, "Gamma_E" + std::to_string(i + 1) + std::to_string(j + 1)));
    }
  LieStructure rest = h - gamma_sum;
  std::vector<AScheme> parts;
  int level = counter++;
  parts.push_back(node_of(gamma_sum, std::move(gamma_leaves), "Gamma_" + std::to_string(level)));
  if (!rest.is_abelian()) {
    Basis c2 = c;
    c2.push_back(nu);
    parts.push_back(solvable_rec(rest, s, c2, counter));
  }
  return node_of(h, std::move(parts), "step_" + std::to_string(level));
}

}  // namespace detail

inline AScheme disassemble_solvable(const LieStructure& g) {
  if (!is_jacobi(g)) throw std::invalid_argument("disassemble_solvable: not a Lie structure");
  if (!is_solvable(g)) throw std::invalid_argument("not solvable");
  if (g.is_abelian()) return leaf(g, "abelian");
  Basis u;
  for (int i = 0; i < g.dim(); ++i) u.push_back(unit(g.dim(), i));
  int counter = 0;
  AScheme s = detail::solvable_rec(g, u, Basis{}, counter);
  s.label = "solvable";
  return s;
}

// One leaf per nonzero constant of g in a basis adapted to (W, W0).
inline AScheme disassemble_dressing(const LieStructure& g, const Basis& w0, const Basis& w) {
  const int n = g.dim();
  Basis z = center(g);
  if (!contains(z, w0)) throw std::invalid_argument("dressing: W0 is not central");
  Mat t = block_basis({adapted_basis(w, n), adapted_basis(w0, n)}, n);
  const int m = static_cast<int>(w.size());
  LieStructure adapted = change_basis(g, t);
  std::vector<AScheme> leaves;
  Mat tinv = inverse(t);
  for (const auto& [key, c] : adapted.constants()) {
    if (key[0] > m || key[1] > m || key[2] <= m) throw std::invalid_argument("dressing: [W,W] not inside W0");
    LieStructure one(n);
    one.add(key[0], key[1], key[2], c);
    leaves.push_back(leaf(change_basis(one, tinv), "beta_" + std::to_string(key[0]) + std::to_string(key[1]) + "|" +
                                                       std::to_string(key[2])));
  }
  if (leaves.empty()) return leaf(g, "abelian");
  return node_of(g, std::move(leaves), "dressing");
}

struct Involution {
  Mat matrix;
};

inline void check_involution(const LieStructure& g, const Involution& inv) {
  const int n = g.dim();
  const Mat& i = inv.matrix;
  if (static_cast<int>(i.size()) != n || i * i != identity(n)) throw std::invalid_argument("strip: not an involution");
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Vec ea = unit(n, a), eb = unit(n, b);
      if (i * bracket(g, ea, eb) != bracket(g, i * ea, i * eb))
        throw std::invalid_argument("strip: not an automorphism");
    }
}

// Eigenspaces of an involution: (+1, -1).
inline std::pair<Basis, Basis> eigen_split(const Mat& i) {
  const int n = static_cast<int>(i.size());
  return {nullspace(i - identity(n), n), nullspace(i + identity(n), n)};
}

// Children: s +_rho W and the dressing algebra carrying the [W,W] brackets.
inline AScheme strip(const LieStructure& g, const Involution& inv) {
  check_involution(g, inv);
  const int n = g.dim();
  auto [s, w] = eigen_split(inv.matrix);
  Mat t = block_basis({s, w}, n);
  const int m = static_cast<int>(s.size());
  auto dress = filter_in_basis(g, t, [m](int a, int b, int) { return a > m && b > m; });
  auto semi = g - dress;
  return AScheme{g, {leaf(semi, "s+W"), leaf(dress, "dressing")}, "strip", false};
}

// Single constant c_ij^k as a coaxial base lieon.
inline BaseLieon term_lieon(int i, int j, int k, const Rational& c) {
  if (k == j) return Dee(i, j, c);
  if (k == i) return Dee(j, i, -c);
  return Tee(i, j, k, c);
}

inline LieStructure single_term(int n, const LieStructure::Key& key, const Rational& c) {
  LieStructure g(n);
  g.add(key[0], key[1], key[2], c);
  return g;
}

inline std::string term_label(const LieStructure::Key& key, const Rational& c) {
  return str(term_lieon(key[0], key[1], key[2], c));
}

// Splits a Lie structure along its constants: terms compatible with every other term form a core,
// the remaining ones are 2-coloured by the incompatibility graph. Each colour class and the core
// are sums of mutually compatible lieons, hence Lie structures, and pairwise compatible because the
// whole sum is one.
inline AScheme disassemble_by_terms(const LieStructure& g, const std::string& label) {
  const int n = g.dim();
  std::vector<std::pair<LieStructure::Key, Rational>> terms(g.constants().begin(), g.constants().end());
  const std::size_t m = terms.size();
  if (m == 0) return leaf(g, label);
  std::vector<BaseLieon> ls;
  for (const auto& [k, c] : terms) ls.push_back(term_lieon(k[0], k[1], k[2], c));
  std::vector<std::vector<std::size_t>> adj(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (!compatible_base(ls[a], ls[b])) {
        adj[a].push_back(b);
        adj[b].push_back(a);
      }
  std::vector<int> colour(m, -1);
  for (std::size_t a = 0; a < m; ++a) {
    if (adj[a].empty() || colour[a] >= 0) continue;
    colour[a] = 0;
    std::queue<std::size_t> q;
    q.push(a);
    while (!q.empty()) {
      auto x = q.front();
      q.pop();
      for (auto y : adj[x]) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          q.push(y);
        } else if (colour[y] == colour[x]) {
          throw std::domain_error("term incompatibility graph is not bipartite: " + label);
        }
      }
    }
  }
  auto group = [&](int which, const std::string& name) {
    std::vector<AScheme> leaves;
    LieStructure total(n);
    for (std::size_t a = 0; a < m; ++a) {
      int cls = adj[a].empty() ? -1 : colour[a];
      if (cls != which) continue;
      auto one = single_term(n, terms[a].first, terms[a].second);
      total += one;
      leaves.push_back(leaf(one, term_label(terms[a].first, terms[a].second)));
    }
    return std::make_pair(total, node_of(total, std::move(leaves), name));
  };
  std::vector<AScheme> parts;
  for (auto [which, name] : {std::pair{-1, std::string("core")}, std::pair{0, std::string("part1")},
                             std::pair{1, std::string("part2")}}) {
    auto [total, sub] = group(which, name);
    if (total.is_abelian()) continue;
    parts.push_back(std::move(sub));
  }
  if (parts.size() == 1 && !parts[0].is_leaf()) {
    parts[0].label = label;
    return std::move(parts[0]);
  }
  return node_of(g, std::move(parts), label);
}

}  // namespace lieons

namespace lieons {

// Applies change_basis(., m) to every node.
inline AScheme transport_scheme(const AScheme& s, const Mat& m) {
  AScheme out{change_basis(s.node, m), {}, s.label, s.flagged};
  for (const auto& c : s.children) out.children.push_back(transport_scheme(c, m));
  return out;
}

// Groups the constants of g by fn(key) (terms mapped to "" become leaves of their own); each group
// becomes a node whose leaves are its single terms.
template <class F>
inline AScheme group_terms(const LieStructure& g, const std::string& label, F fn) {
  const int n = g.dim();
  std::map<std::string, std::vector<std::pair<LieStructure::Key, Rational>>> groups;
  std::vector<AScheme> singles;
  for (const auto& [key, c] : g.constants()) {
    std::string name = fn(key);
    if (name.empty())
      singles.push_back(leaf(single_term(n, key, c), term_label(key, c)));
    else
      groups[name].emplace_back(key, c);
  }
  std::vector<AScheme> parts;
  for (auto& [name, terms] : groups) {
    LieStructure total(n);
    std::vector<AScheme> leaves;
    for (const auto& [key, c] : terms) {
      auto one = single_term(n, key, c);
      total += one;
      leaves.push_back(leaf(one, term_label(key, c)));
    }
    parts.push_back(node_of(total, std::move(leaves), name));
  }
  for (auto& s : singles) parts.push_back(std::move(s));
  if (parts.empty()) return leaf(g, label);
  return node_of(g, std::move(parts), label);
}

}  // namespace lieons
