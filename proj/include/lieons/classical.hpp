#pragma once

#include <optional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lie.hpp"
#include "scheme.hpp"

namespace lieons {

enum class ClassicalKind { so, sp, gl, sl, u, su };

inline std::string kind_name(ClassicalKind k) {
  switch (k) {
    case ClassicalKind::so: return "so";
    case ClassicalKind::sp: return "sp";
    case ClassicalKind::gl: return "gl";
    case ClassicalKind::sl: return "sl";
    case ClassicalKind::u: return "u";
    default: return "su";
  }
}

inline ClassicalKind parse_kind(const std::string& s) {
  for (auto k : {ClassicalKind::so, ClassicalKind::sp, ClassicalKind::gl, ClassicalKind::sl, ClassicalKind::u,
                 ClassicalKind::su})
    if (kind_name(k) == s) return k;
  throw std::invalid_argument("unknown classical kind: " + s);
}

// so: params are the diagonal coefficients a_1..a_n. sp: n is the number of (p,q) pairs.
struct ClassicalSpec {
  ClassicalKind kind = ClassicalKind::so;
  int n = 0;
  std::vector<Rational> params;
  std::optional<Rational> lambda;

  Rational dressing_scale() const {
    if (lambda) return *lambda;
    return kind == ClassicalKind::u || kind == ClassicalKind::su ? Rational(-1) : Rational(1);
  }
};

// A Lie structure together with the data of its distinguished basis.
struct ClassicalModel {
  LieStructure g{1};
  std::vector<std::string> names;
  std::vector<std::vector<int>> weights;  // multiplicity of each index 1..n
  std::vector<int> parity;                // 0: skew part s, 1: symmetric part W
};

// Structure constants of the span of the given matrices, in that basis.
inline LieStructure structure_from_matrices(const std::vector<Mat>& basis) {
  const int d = static_cast<int>(basis.size());
  auto flat = [](const Mat& m) {
    Vec v;
    for (const auto& r : m) v.insert(v.end(), r.begin(), r.end());
    return v;
  };
  Basis b;
  for (const auto& m : basis) b.push_back(flat(m));
  LieStructure g(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec c = coordinates(b, flat(commutator(basis[i], basis[j])));
      for (int k = 0; k < d; ++k)
        if (c[k] != 0) g.add(i + 1, j + 1, k + 1, c[k]);
    }
  return g;
}

namespace detail {

inline Mat matrix_unit(int n, int i, int j) {
  Mat m = zeros(n, n);
  m[i - 1][j - 1] = 1;
  return m;
}

inline std::vector<int> pair_weight(int n, int i, int j) {
  std::vector<int> w(n, 0);
  ++w[i - 1];
  ++w[j - 1];
  return w;
}

inline void check_spec(const ClassicalSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("classical: n must be positive");
  int dim = 0;
  switch (spec.kind) {
    case ClassicalKind::so:
      if (spec.n < 2) throw std::invalid_argument("classical: so needs n >= 2");
      if (static_cast<int>(spec.params.size()) != spec.n)
        throw std::invalid_argument("classical: so needs n coefficients");
      for (const auto& a : spec.params)
        if (a == 0) throw std::invalid_argument("classical: so coefficients must be nonzero");
      dim = spec.n * (spec.n - 1) / 2;
      break;
    case ClassicalKind::sp: dim = 2 * spec.n * spec.n + spec.n; break;
    case ClassicalKind::gl:
    case ClassicalKind::u: dim = spec.n * spec.n; break;
    default:
      if (spec.n < 2) throw std::invalid_argument("classical: sl/su need n >= 2");
      dim = spec.n * spec.n - 1;
  }
  if (spec.kind != ClassicalKind::so && !spec.params.empty())
    throw std::invalid_argument("classical: params are only used by so");
  if (spec.kind == ClassicalKind::sp && spec.lambda) throw std::invalid_argument("classical: sp takes no lambda");
  if (spec.kind == ClassicalKind::so && spec.lambda) throw std::invalid_argument("classical: so takes no lambda");
  if (spec.lambda && *spec.lambda == 0) throw std::invalid_argument("classical: lambda must be nonzero");
  if (dim > MultiVector::kMaxDim) throw std::invalid_argument("classical: dimension too large");
}

inline ClassicalModel so_model(const ClassicalSpec& spec) {
  const int n = spec.n;
  ClassicalModel m;
  std::vector<Mat> basis;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      basis.push_back(spec.params[j - 1] * matrix_unit(n, i, j) - spec.params[i - 1] * matrix_unit(n, j, i));
      m.names.push_back("e" + std::to_string(i) + std::to_string(j));
      m.weights.push_back(pair_weight(n, i, j));
      m.parity.push_back(0);
    }
  m.g = structure_from_matrices(basis);
  return m;
}

// Basis e0_ij (i<j), then e1_ij (i<=j) for gl, or e1_ij (i<j) and e_i = E_ii - E_11 (i>1) for sl.
inline ClassicalModel gl_model(const ClassicalSpec& spec) {
  const int n = spec.n;
  const bool traceless = spec.kind == ClassicalKind::sl || spec.kind == ClassicalKind::su;
  ClassicalModel m;
  std::vector<Mat> basis;
  auto push = [&](Mat x, std::string name, std::vector<int> w, int par) {
    basis.push_back(std::move(x));
    m.names.push_back(std::move(name));
    m.weights.push_back(std::move(w));
    m.parity.push_back(par);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      push(matrix_unit(n, i, j) - matrix_unit(n, j, i), "e0_" + std::to_string(i) + std::to_string(j),
           pair_weight(n, i, j), 0);
  for (int i = 1; i <= n; ++i)
    for (int j = traceless ? i + 1 : i; j <= n; ++j)
      push(matrix_unit(n, i, j) + matrix_unit(n, j, i), "e1_" + std::to_string(i) + std::to_string(j),
           pair_weight(n, i, j), 1);
  if (traceless)
    for (int i = 2; i <= n; ++i)
      push(matrix_unit(n, i, i) - matrix_unit(n, 1, 1), "e_" + std::to_string(i), pair_weight(n, i, i), 1);
  LieStructure g = structure_from_matrices(basis);
  const Rational lam = spec.dressing_scale();
  LieStructure scaled(g.dim());
  for (const auto& [key, c] : g.constants()) {
    bool dress = m.parity[key[0] - 1] == 1 && m.parity[key[1] - 1] == 1;
    scaled.add(key[0], key[1], key[2], dress ? Rational(lam * c) : c);
  }
  m.g = scaled;
  return m;
}

// Quadratic monomials in p_1..p_n, q_1..q_n; variables 0..n-1 are p, n..2n-1 are q.
struct QuadraticBasis {
  int n;
  std::vector<std::pair<int, int>> monos;

  explicit QuadraticBasis(int n_) : n(n_) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) monos.emplace_back(i, j);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) monos.emplace_back(i, n + j);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) monos.emplace_back(n + i, n + j);
  }
  int index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (std::size_t a = 0; a < monos.size(); ++a)
      if (monos[a] == std::make_pair(u, v)) return static_cast<int>(a) + 1;
    throw std::out_of_range("not a quadratic monomial");
  }
  std::string var(int u) const { return (u < n ? "p" : "q") + std::to_string(u % n + 1); }
  std::string name(int a) const {
    auto [u, v] = monos[a - 1];
    return var(u) + var(v);
  }
  // Linear polynomial d(x_u x_v)/d x_w as (variable, coefficient) pairs.
  static std::vector<std::pair<int, Rational>> diff(std::pair<int, int> m, int w) {
    std::vector<std::pair<int, Rational>> out;
    if (m.first == w) out.emplace_back(m.second, 1);
    if (m.second == w) out.emplace_back(m.first, 1);
    return out;
  }
  // Bracket of the Poisson structure d/dp_alpha ^ d/dq_alpha (0-based alpha).
  LieStructure partial_bracket(int alpha) const {
    const int d = static_cast<int>(monos.size());
    LieStructure g(d);
    auto term = [&](int a, int b, int x, int y, const Rational& sign) {
      for (const auto& [u, cu] : diff(monos[a], x))
        for (const auto& [v, cv] : diff(monos[b], y)) g.add(a + 1, b + 1, index(u, v), sign * cu * cv);
    };
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        term(a, b, alpha, n + alpha, 1);
        term(a, b, n + alpha, alpha, -1);
      }
    return g;
  }
};

inline ClassicalModel sp_model(const ClassicalSpec& spec) {
  QuadraticBasis qb(spec.n);
  ClassicalModel m;
  LieStructure g(static_cast<int>(qb.monos.size()));
  for (int alpha = 0; alpha < spec.n; ++alpha) g += qb.partial_bracket(alpha);
  for (int a = 1; a <= g.dim(); ++a) m.names.push_back(qb.name(a));
  m.g = g;
  return m;
}

// The index alpha with w(a) + w(b) - w(k) = 2 alpha, 1-based.
inline int weight_class(const ClassicalModel& m, const LieStructure::Key& key) {
  const auto& wa = m.weights[key[0] - 1];
  const auto& wb = m.weights[key[1] - 1];
  const auto& wk = m.weights[key[2] - 1];
  int alpha = 0;
  for (std::size_t i = 0; i < wa.size(); ++i) {
    int d = wa[i] + wb[i] - wk[i];
    if (d == 0) continue;
    if (d != 2 || alpha != 0) throw std::logic_error("weight grouping failed");
    alpha = static_cast<int>(i) + 1;
  }
  if (alpha == 0) throw std::logic_error("weight grouping failed");
  return alpha;
}

inline std::vector<LieStructure> split_by_weight(const ClassicalModel& m, const LieStructure& g) {
  std::vector<LieStructure> parts(m.weights.at(0).size(), LieStructure(g.dim()));
  for (const auto& [key, c] : g.constants()) parts[weight_class(m, key) - 1].add(key[0], key[1], key[2], c);
  return parts;
}

inline Basis parity_basis(const ClassicalModel& m, int par) {
  Basis b;
  for (std::size_t a = 0; a < m.parity.size(); ++a)
    if (m.parity[a] == par) b.push_back(unit(m.parity.size(), a));
  return b;
}

inline Involution parity_involution(const ClassicalModel& m) {
  Mat i = identity(m.parity.size());
  for (std::size_t a = 0; a < m.parity.size(); ++a)
    if (m.parity[a] == 1) i[a][a] = -1;
  return {i};
}

inline AScheme singles(const LieStructure& g, const std::string& label) {
  return group_terms(g, label, [](const LieStructure::Key&) { return std::string(); });
}

// Strip along (s, W); the s+W part is handled by q_parts, the dressing splits into single terms.
template <class F>
inline AScheme stripped_scheme(const ClassicalModel& m, F q_parts) {
  AScheme s = strip(m.g, parity_involution(m));
  LieStructure q = s.children[0].node;
  LieStructure dress = s.children[1].node;
  std::vector<AScheme> parts;
  auto qs = split_by_weight(m, q);
  for (std::size_t a = 0; a < qs.size(); ++a)
    if (!qs[a].is_abelian()) parts.push_back(q_parts(static_cast<int>(a) + 1, qs[a]));
  s.children[0] = node_of(q, std::move(parts), "Q");
  s.children[1] = disassemble_dressing(dress, parity_basis(m, 0), parity_basis(m, 1));
  return s;
}

inline AScheme gl_scheme(const ClassicalModel& m) {
  auto idx = [&](const std::string& name) {
    for (std::size_t a = 0; a < m.names.size(); ++a)
      if (m.names[a] == name) return static_cast<int>(a) + 1;
    return 0;
  };
  AScheme s = stripped_scheme(m, [&](int alpha, const LieStructure& qa) {
    const int diag = idx("e1_" + std::to_string(alpha) + std::to_string(alpha));
    const std::string tag = "_" + std::to_string(alpha);
    return group_terms(qa, "Q" + tag, [&](const LieStructure::Key& k) {
      bool all_s = m.parity[k[0] - 1] == 0 && m.parity[k[1] - 1] == 0 && m.parity[k[2] - 1] == 0;
      if (all_s) return "Q1" + tag;
      if (k[0] == diag || k[1] == diag) return "Q3" + tag;
      return "Q2" + tag;
    });
  });
  s.label = "gl";
  return s;
}

inline AScheme sl_scheme(const ClassicalModel& m) {
  AScheme s = stripped_scheme(m, [&](int j, const LieStructure& qj) {
    const std::string tag = "_" + std::to_string(j);
    if (j == 1) return singles(qj, "Q0" + tag);
    int s1j = 0;
    for (std::size_t a = 0; a < m.names.size(); ++a)
      if (m.names[a] == "e0_1" + std::to_string(j)) s1j = static_cast<int>(a) + 1;
    std::vector<std::pair<LieStructure::Key, BaseLieon>> terms;
    for (const auto& [k, c] : qj.constants()) terms.emplace_back(k, term_lieon(k[0], k[1], k[2], c));
    const std::size_t t = terms.size();
    std::vector<std::vector<std::size_t>> adj(t);
    for (std::size_t a = 0; a < t; ++a)
      for (std::size_t b = a + 1; b < t; ++b)
        if (!compatible_base(terms[a].second, terms[b].second)) {
          adj[a].push_back(b);
          adj[b].push_back(a);
        }
    // Two-colouring seeded by the terms with end e0_1j on the primed side.
    std::vector<int> colour(t, -1);
    std::vector<std::size_t> queue;
    for (std::size_t a = 0; a < t; ++a)
      if (!adj[a].empty() && (terms[a].first[0] == s1j || terms[a].first[1] == s1j)) {
        colour[a] = 0;
        queue.push_back(a);
      }
    for (std::size_t h = 0; h < queue.size(); ++h)
      for (auto b : adj[queue[h]]) {
        if (colour[b] < 0) {
          colour[b] = 1 - colour[queue[h]];
          queue.push_back(b);
        } else if (colour[b] == colour[queue[h]]) {
          throw std::logic_error("sl scheme: term graph is not bipartite");
        }
      }
    std::map<LieStructure::Key, int> side;
    for (std::size_t a = 0; a < t; ++a) {
      if (!adj[a].empty() && colour[a] < 0) throw std::logic_error("sl scheme: unreached incompatible term");
      side[terms[a].first] = colour[a];
    }
    return group_terms(qj, "Q0" + tag, [&](const LieStructure::Key& k) {
      int c = side.at(k);
      if (c < 0) return std::string();
      return (c == 0 ? "Q'" : "Q''") + tag;
    });
  });
  s.label = "sl";
  return s;
}

// For h = <nu> +_rho |V| with ad(nu) diagonal in the coordinate basis, pairs eigenvectors u, v with
// opposite eigenvalues and passes to u+v, u-v, where each pair carries two forks.
inline AScheme fork_pairs(const LieStructure& h, int nu, const std::string& label) {
  const int n = h.dim();
  Mat a = ad(h, unit(n, nu - 1));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && a[i][j] != 0) throw std::domain_error("fork_pairs: action is not diagonal");
  Mat t = identity(n);
  std::vector<bool> used(n, false);
  for (int u = 0; u < n; ++u) {
    if (used[u] || a[u][u] == 0) continue;
    for (int v = u + 1; v < n; ++v)
      if (!used[v] && a[v][v] == -a[u][u]) {
        used[u] = used[v] = true;
        t[v][u] = 1;
        t[u][v] = 1;
        t[v][v] = -1;
        break;
      }
  }
  LieStructure moved = change_basis(h, t);
  return transport_scheme(singles(moved, label), inverse(t));
}

inline AScheme sp_alpha_scheme(const QuadraticBasis& qb, const LieStructure& g, int alpha) {
  const int d = g.dim();
  const int n = qb.n;
  const int pa = alpha, qa = n + alpha;
  const std::string tag = "_" + std::to_string(alpha + 1);
  const int p2 = qb.index(pa, pa), pq = qb.index(pa, qa), q2 = qb.index(qa, qa);
  auto involves = [&](int a, int var) { return qb.monos[a - 1].first == var || qb.monos[a - 1].second == var; };
  Basis s3{unit(d, p2 - 1), unit(d, pq - 1), unit(d, q2 - 1)};
  Basis r, plus, minus, ideal_i;
  for (int a = 1; a <= d; ++a) {
    Vec e = unit(d, a - 1);
    if (a != p2 && a != pq && a != q2) r.push_back(e);
    if (a != pq) ideal_i.push_back(e);
    if (a == pq || (a != p2 && involves(a, pa)))
      plus.push_back(e);
    else
      minus.push_back(e);
  }
  auto [action, inner] = split_semidirect(g, r, s3);
  std::vector<AScheme> top;
  {
    Mat inv = identity(d);
    for (const auto& v : minus)
      for (int a = 0; a < d; ++a)
        if (v[a] != 0) inv[a][a] = -1;
    AScheme st = strip(action, Involution{inv});
    LieStructure semi = st.children[0].node;
    auto [gam, rest] = split_semidirect(semi, ideal_i, Basis{unit(d, pq - 1)});
    std::vector<AScheme> sub;
    if (!gam.is_abelian()) sub.push_back(fork_pairs(gam, pq, "pq+i" + tag));
    if (!rest.is_abelian()) sub.push_back(singles(rest, "gamma+i" + tag));
    st.children[0] = node_of(semi, std::move(sub), "a" + tag);
    st.children[1] = disassemble_dressing(st.children[1].node, plus, minus);
    st.label = "s+r" + tag;
    top.push_back(std::move(st));
  }
  if (!inner.is_abelian()) top.push_back(singles(inner, "gamma+r" + tag));
  return node_of(g, std::move(top), "sp" + tag);
}

inline AScheme sp_scheme(const ClassicalSpec& spec, const LieStructure& g) {
  QuadraticBasis qb(spec.n);
  std::vector<AScheme> parts;
  for (int alpha = 0; alpha < spec.n; ++alpha) parts.push_back(sp_alpha_scheme(qb, qb.partial_bracket(alpha), alpha));
  return node_of(g, std::move(parts), "sp");
}

inline AScheme so_scheme(const ClassicalModel& m) {
  auto ps = split_by_weight(m, m.g);
  std::vector<AScheme> parts;
  for (std::size_t a = 0; a < ps.size(); ++a)
    if (!ps[a].is_abelian()) parts.push_back(singles(ps[a], "P_" + std::to_string(a + 1)));
  if (parts.empty()) return leaf(m.g, "so");
  return node_of(m.g, std::move(parts), "so");
}

}  // namespace detail

inline ClassicalModel classical_model(const ClassicalSpec& spec) {
  detail::check_spec(spec);
  switch (spec.kind) {
    case ClassicalKind::so: return detail::so_model(spec);
    case ClassicalKind::sp: return detail::sp_model(spec);
    default: return detail::gl_model(spec);
  }
}

inline LieStructure make_classical(const ClassicalSpec& spec) { return classical_model(spec).g; }

inline AScheme canonical_scheme(const ClassicalSpec& spec) {
  ClassicalModel m = classical_model(spec);
  switch (spec.kind) {
    case ClassicalKind::so: return detail::so_scheme(m);
    case ClassicalKind::sp: return detail::sp_scheme(spec, m.g);
    case ClassicalKind::gl:
    case ClassicalKind::u: {
      AScheme s = detail::gl_scheme(m);
      s.label = kind_name(spec.kind);
      return s;
    }
    default: {
      AScheme s = detail::sl_scheme(m);
      s.label = kind_name(spec.kind);
      return s;
    }
  }
}

// First-level decomposition of so(n) with the coefficients a_alpha kept free: the structure is
// sum_alpha a_alpha * blocks[alpha-1].
struct UniversalScheme {
  ClassicalKind kind = ClassicalKind::so;
  int n = 0;
  std::vector<LieStructure> blocks;

  AScheme instantiate(const std::vector<Rational>& a) const {
    if (static_cast<int>(a.size()) != n) throw std::invalid_argument("instantiate: wrong number of coefficients");
    for (const auto& x : a)
      if (x == 0) throw std::invalid_argument("instantiate: coefficients must be nonzero");
    LieStructure root(blocks.at(0).dim());
    std::vector<AScheme> parts;
    for (int i = 0; i < n; ++i) {
      LieStructure p = a[i] * blocks[i];
      root += p;
      if (!p.is_abelian()) parts.push_back(detail::singles(p, "P_" + std::to_string(i + 1)));
    }
    if (parts.empty()) return leaf(root, "so");
    return node_of(root, std::move(parts), "so");
  }
};

inline UniversalScheme universal_scheme_signature(ClassicalKind kind, int n) {
  if (kind != ClassicalKind::so) throw std::invalid_argument("universal scheme: unsupported kind " + kind_name(kind));
  ClassicalSpec unit_spec{kind, n, std::vector<Rational>(n > 0 ? n : 0, Rational(1)), std::nullopt};
  ClassicalModel m = classical_model(unit_spec);
  return UniversalScheme{kind, n, detail::split_by_weight(m, m.g)};
}

}  // namespace lieons
