#pragma once

#include <algorithm>
#include <array>
#include <bitset>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lie.hpp"
#include "lieon.hpp"

namespace lieons {

inline constexpr int kMaxClusterDim = 6;

enum class VertexType { t_center, d_center, end, mixing };

inline std::string to_string(VertexType t) {
  switch (t) {
    case VertexType::t_center: return "t-center";
    case VertexType::d_center: return "d-center";
    case VertexType::end: return "end";
    default: return "mixing";
  }
}

struct ClusterCard {
  int n_t = 0, n_e = 0, n_d = 0, n_tr = 0, n_r = 0;
  std::vector<int> t, p;
  std::vector<std::vector<int>> B, D;

  auto operator<=>(const ClusterCard&) const = default;
  bool operator==(const ClusterCard&) const = default;

  int dimension() const {
    int d = n_t + n_e + n_d + 3 * n_tr + 2 * n_r;
    for (int i = 0; i < n_e; ++i) {
      d += p[i] + 2 * t[i];
      for (int j = i + 1; j < n_e; ++j) d += B[i][j] + D[i][j];
    }
    return d;
  }

  std::string str() const {
    auto vec = [](const std::vector<int>& v) {
      std::string s = "(";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
      return s + ")";
    };
    auto mat = [&](const std::vector<std::vector<int>>& m) {
      std::string s = "[";
      for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + vec(m[i]);
      return s + "]";
    };
    std::ostringstream os;
    os << "(" << n_t << "," << n_e << "," << n_d << "," << n_tr << "," << n_r << ",[t=" << vec(t)
       << ",p=" << vec(p) << ",B=" << mat(B) << ",D=" << mat(D) << "])";
    return os.str();
  }
};

namespace detail {

using Code = std::vector<std::array<int, 4>>;

inline Code encode(const BaseFamily& f) {
  Code c;
  for (const auto& t : f.tees) c.push_back({0, t.i, t.j, t.k});
  for (const auto& d : f.dees) c.push_back({1, d.p, d.q, 0});
  std::sort(c.begin(), c.end());
  return c;
}

inline BaseFamily decode(const Code& c, int dim) {
  BaseFamily f{dim, {}, {}};
  for (const auto& x : c) {
    if (x[0] == 0)
      f.tees.emplace_back(x[1], x[2], x[3]);
    else
      f.dees.emplace_back(x[1], x[2]);
  }
  return f;
}

inline bool has_shape(const BaseFamily& f, const BaseLieon& x) {
  if (const auto* t = std::get_if<Tee>(&x))
    return std::any_of(f.tees.begin(), f.tees.end(), [&](const Tee& y) { return y.same_shape(*t); });
  const auto& d = std::get<Dee>(x);
  return std::any_of(f.dees.begin(), f.dees.end(), [&](const Dee& y) { return y.same_shape(d); });
}

inline void add_member(BaseFamily& f, const BaseLieon& x) {
  if (const auto* t = std::get_if<Tee>(&x))
    f.tees.push_back(*t);
  else
    f.dees.push_back(std::get<Dee>(x));
}

// Base lieons with all vertices in s: tees (i<j, k) first, then dees, each in lexicographic order.
inline std::vector<BaseLieon> lieons_on(const std::set<int>& s) {
  std::vector<int> v(s.begin(), s.end());
  std::vector<BaseLieon> out;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = a + 1; b < v.size(); ++b)
      for (int k : v)
        if (k != v[a] && k != v[b]) out.emplace_back(Tee(v[a], v[b], k));
  for (int p : v)
    for (int q : v)
      if (p != q) out.emplace_back(Dee(p, q));
  return out;
}

inline void require_compatible(const BaseFamily& f) {
  f.validate();
  if (!family_is_compatible(f)) throw std::invalid_argument("family is not compatible");
}

inline bool upsilon_connected(const BaseFamily& f) {
  auto s = f.vertices();
  if (s.empty()) return false;
  std::map<int, int> parent;
  for (int v : s) parent[v] = v;
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  auto join = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& t : f.tees) {
    join(t.i, t.k);
    join(t.j, t.k);
  }
  for (const auto& d : f.dees) join(d.p, d.q);
  int root = find(*s.begin());
  return std::all_of(s.begin(), s.end(), [&](int v) { return find(v) == root; });
}

using Bits = std::bitset<128>;

// Bron-Kerbosch with pivoting over an adjacency list of bitsets.
inline void maximal_cliques(const std::vector<Bits>& adj, Bits r, Bits p, Bits x,
                            const std::function<void(const Bits&)>& emit) {
  if (p.none() && x.none()) {
    emit(r);
    return;
  }
  std::size_t pivot = 0, best = 0;
  Bits px = p | x;
  for (std::size_t u = 0; u < adj.size(); ++u)
    if (px[u]) {
      std::size_t c = (p & adj[u]).count();
      if (c >= best) {
        best = c;
        pivot = u;
      }
    }
  Bits todo = p & ~adj[pivot];
  for (std::size_t v = 0; v < adj.size(); ++v) {
    if (!todo[v]) continue;
    Bits rv = r;
    rv.set(v);
    maximal_cliques(adj, rv, p & adj[v], x & adj[v], emit);
    p.reset(v);
    x.set(v);
  }
}

// All maximal compatible families drawn from pool that contain every member of base.
inline std::vector<BaseFamily> maximal_families(const std::vector<BaseLieon>& pool, const BaseFamily& base, int dim) {
  std::vector<BaseLieon> cand;
  for (const auto& x : pool) {
    if (has_shape(base, x)) continue;
    bool ok = true;
    for (const auto& m : base.members())
      if (!compatible_base(x, m)) {
        ok = false;
        break;
      }
    if (ok) cand.push_back(x);
  }
  if (cand.size() > 128) throw std::length_error("too many candidates for clique search");
  std::vector<Bits> adj(cand.size());
  for (std::size_t a = 0; a < cand.size(); ++a)
    for (std::size_t b = a + 1; b < cand.size(); ++b)
      if (compatible_base(cand[a], cand[b])) {
        adj[a].set(b);
        adj[b].set(a);
      }
  Bits all;
  for (std::size_t a = 0; a < cand.size(); ++a) all.set(a);
  std::vector<BaseFamily> out;
  maximal_cliques(adj, Bits{}, all, Bits{}, [&](const Bits& r) {
    BaseFamily f{dim, {}, {}};
    for (const auto& t : base.tees) f.tees.emplace_back(t.i, t.j, t.k);
    for (const auto& d : base.dees) f.dees.emplace_back(d.p, d.q);
    for (std::size_t a = 0; a < cand.size(); ++a)
      if (r[a]) add_member(f, cand[a]);
    out.push_back(std::move(f));
  });
  return out;
}

}  // namespace detail

// Renames vertex v to perm[v]; unit coefficients.
inline BaseFamily relabel(const BaseFamily& f, const std::map<int, int>& perm, int dim) {
  BaseFamily g{dim, {}, {}};
  for (const auto& t : f.tees) {
    int a = perm.at(t.i), b = perm.at(t.j);
    g.tees.emplace_back(std::min(a, b), std::max(a, b), perm.at(t.k));
  }
  for (const auto& d : f.dees) g.dees.emplace_back(perm.at(d.p), perm.at(d.q));
  return g;
}

// Least relabelling of S(F) onto 1..|S(F)|, members sorted, unit coefficients.
inline BaseFamily canonical_form(const BaseFamily& f) {
  auto s = f.vertices();
  std::vector<int> src(s.begin(), s.end());
  std::vector<int> img(src.size());
  std::iota(img.begin(), img.end(), 1);
  detail::Code best;
  bool first = true;
  do {
    std::map<int, int> perm;
    for (std::size_t a = 0; a < src.size(); ++a) perm[src[a]] = img[a];
    auto code = detail::encode(relabel(f, perm, static_cast<int>(src.size())));
    if (first || code < best) {
      best = std::move(code);
      first = false;
    }
  } while (std::next_permutation(img.begin(), img.end()));
  return detail::decode(best, static_cast<int>(src.size()));
}

inline bool is_cluster(const BaseFamily& f) {
  detail::require_compatible(f);
  if (!detail::upsilon_connected(f)) return false;
  for (const auto& x : detail::lieons_on(f.vertices())) {
    bool blocked = false;
    for (const auto& m : f.members())
      if (!compatible_base(x, m)) {
        blocked = true;
        break;
      }
    if (blocked == detail::has_shape(f, x)) return false;
  }
  return true;
}

inline BaseFamily complete_family(const BaseFamily& f) {
  detail::require_compatible(f);
  BaseFamily g = f;
  auto pool = detail::lieons_on(f.vertices());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& x : pool) {
      if (detail::has_shape(g, x)) continue;
      auto ms = g.members();
      if (std::all_of(ms.begin(), ms.end(), [&](const BaseLieon& m) { return compatible_base(x, m); })) {
        detail::add_member(g, x);
        grew = true;
        break;
      }
    }
  }
  return g;
}

// Every vertex-set-maximal compatible family on S(F) containing F.
inline std::vector<BaseFamily> maximal_extensions(const BaseFamily& f) {
  detail::require_compatible(f);
  return detail::maximal_families(detail::lieons_on(f.vertices()), f, f.dim);
}

namespace detail {

inline std::vector<BaseFamily> enumerate_from(const std::vector<BaseLieon>& pool, int n) {
  if (n < 1 || n > kMaxClusterDim)
    throw std::out_of_range("cluster enumeration supports 1 <= n <= " + std::to_string(kMaxClusterDim));
  std::set<Code> seen;
  for (auto& f : maximal_families(pool, BaseFamily{n, {}, {}}, n)) {
    if (static_cast<int>(f.vertices().size()) != n || !upsilon_connected(f)) continue;
    seen.insert(encode(canonical_form(f)));
  }
  std::vector<BaseFamily> out;
  for (const auto& c : seen) out.push_back(decode(c, n));
  return out;
}

}  // namespace detail

inline std::vector<BaseFamily> enumerate_clusters(int n) {
  return detail::enumerate_from(all_base_lieons(n), n);
}

// Maximal dee-only families with full vertex set and connected graph.
inline std::vector<BaseFamily> enumerate_dee_clusters(int n) {
  std::vector<BaseLieon> pool;
  for (const auto& x : all_base_lieons(n))
    if (std::holds_alternative<Dee>(x)) pool.push_back(x);
  return detail::enumerate_from(pool, n);
}

inline std::map<int, VertexType> vertex_types(const BaseFamily& f) {
  detail::require_compatible(f);
  std::set<int> tee_end, tee_center, dee_origin, dee_end;
  for (const auto& t : f.tees) {
    tee_end.insert({t.i, t.j});
    tee_center.insert(t.k);
  }
  for (const auto& d : f.dees) {
    dee_origin.insert(d.p);
    dee_end.insert(d.q);
  }
  std::map<int, VertexType> out;
  for (int v : f.vertices()) {
    bool te = tee_end.count(v), tc = tee_center.count(v), dor = dee_origin.count(v), de = dee_end.count(v);
    if (dor || (te && !tc))
      out[v] = VertexType::end;
    else if (tc && !te && !de)
      out[v] = VertexType::t_center;
    else if (de && !te && !tc)
      out[v] = VertexType::d_center;
    else
      out[v] = VertexType::mixing;
  }
  return out;
}

namespace detail {

struct Anatomy {
  std::vector<int> ends, t_centers, d_centers, doubles;
  std::vector<std::array<int, 3>> triangles;
  std::map<int, std::string> role;
  ClusterCard raw;
};

inline Anatomy anatomy(const BaseFamily& f) {
  std::set<std::array<int, 3>> tees;
  std::set<std::pair<int, int>> dees;
  std::set<int> s0, s1, tee_end, tee_center;
  for (const auto& t : f.tees) {
    tees.insert(t.key());
    s0.insert({t.i, t.j, t.k});
    tee_end.insert({t.i, t.j});
    tee_center.insert(t.k);
  }
  for (const auto& d : f.dees) {
    dees.insert({d.p, d.q});
    s1.insert({d.p, d.q});
  }
  auto tee = [&](int a, int b, int c) { return tees.count({std::min(a, b), std::max(a, b), c}) > 0; };
  auto dee = [&](int p, int q) { return dees.count({p, q}) > 0; };
  auto verts = f.vertices();

  Anatomy a;
  auto assign = [&](int v, const std::string& r) {
    auto it = a.role.find(v);
    if (it != a.role.end() && it->second != r)
      throw std::logic_error("vertex " + std::to_string(v) + " has two roles: " + it->second + ", " + r);
    a.role[v] = r;
  };

  std::set<int> dbl;
  for (const auto& [p, q] : dees)
    if (p < q && dee(q, p)) {
      dbl.insert({p, q});
      ++a.raw.n_r;
    }
  for (int v : verts) {
    bool origin = std::any_of(dees.begin(), dees.end(), [&](const auto& d) { return d.first == v; });
    if (dbl.count(v)) continue;
    if (origin || (tee_end.count(v) && !tee_center.count(v))) a.ends.push_back(v);
    if (tee_center.count(v) && !tee_end.count(v) && !s1.count(v)) a.t_centers.push_back(v);
    if (!s0.count(v) && !origin && s1.count(v)) a.d_centers.push_back(v);
  }
  a.doubles.assign(dbl.begin(), dbl.end());
  for (int v : a.ends) assign(v, "end");
  for (int v : a.t_centers) assign(v, "t-center");
  for (int v : a.d_centers) assign(v, "d-center");
  for (int v : a.doubles) assign(v, "double");

  std::vector<int> vs(verts.begin(), verts.end());
  for (std::size_t x = 0; x < vs.size(); ++x)
    for (std::size_t y = x + 1; y < vs.size(); ++y)
      for (std::size_t z = y + 1; z < vs.size(); ++z) {
        int i = vs[x], j = vs[y], k = vs[z];
        if (tee(i, j, k) && tee(j, k, i) && tee(i, k, j)) {
          a.triangles.push_back({i, j, k});
          for (int v : {i, j, k}) assign(v, "triangle");
        }
      }
  a.raw.n_tr = static_cast<int>(a.triangles.size());

  const int m = static_cast<int>(a.ends.size());
  std::map<int, int> idx;
  for (int e = 0; e < m; ++e) idx[a.ends[e]] = e;
  auto is_end = [&](int v) { return idx.count(v) > 0; };
  ClusterCard& c = a.raw;
  c.n_t = static_cast<int>(a.t_centers.size());
  c.n_e = m;
  c.n_d = static_cast<int>(a.d_centers.size());
  c.t.assign(m, 0);
  c.p.assign(m, 0);
  c.B.assign(m, std::vector<int>(m, 0));
  c.D.assign(m, std::vector<int>(m, 0));

  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y)
      for (int v : vs) {
        int e1 = a.ends[x], e2 = a.ends[y];
        if (dee(e1, v) && dee(e2, v) && tee(e1, e2, v)) {
          ++c.D[x][y];
          ++c.D[y][x];
          assign(v, "d-bridge " + std::to_string(e1) + "," + std::to_string(e2));
        }
      }

  for (int x = 0; x < m; ++x) {
    int e = a.ends[x];
    std::set<int> bottoms;
    for (std::size_t u = 0; u < vs.size(); ++u)
      for (std::size_t w = u + 1; w < vs.size(); ++w) {
        int b1 = vs[u], b2 = vs[w];
        if (b1 == e || b2 == e || !tee(e, b1, b2) || !tee(e, b2, b1)) continue;
        bool trey = std::any_of(vs.begin(), vs.end(), [&](int z) { return z != e && tee(b1, b2, z); });
        if (!trey) {
          bottoms.insert({b1, b2});
        } else if (!tee(b1, b2, e)) {
          ++c.t[x];
          assign(b1, "trey " + std::to_string(e));
          assign(b2, "trey " + std::to_string(e));
        }
      }
    for (int b : bottoms) assign(b, "pyramid " + std::to_string(e));
    c.p[x] = static_cast<int>(bottoms.size());
  }

  for (const auto& t : f.tees) {
    int z = t.k;
    if (!is_end(t.i) || !is_end(t.j) || s1.count(z) || !tee_end.count(z)) continue;
    auto centered = std::count_if(f.tees.begin(), f.tees.end(), [&](const Tee& u) { return u.k == z; });
    if (centered != 1) continue;
    ++c.B[idx[t.i]][idx[t.j]];
    ++c.B[idx[t.j]][idx[t.i]];
    assign(z, "bridge " + std::to_string(t.i) + "," + std::to_string(t.j));
  }

  // Remaining vertices are collapsed pyramids: every member through them is rooted at one end.
  for (int v : vs) {
    if (a.role.count(v)) continue;
    std::vector<int> roots;
    for (int e : a.ends) {
      bool all = std::all_of(f.tees.begin(), f.tees.end(), [&](const Tee& t) {
        return !(t.i == v || t.j == v || t.k == v) || t.i == e || t.j == e || t.k == e;
      });
      all = all && std::all_of(f.dees.begin(), f.dees.end(), [&](const Dee& d) {
        return !(d.p == v || d.q == v) || d.p == e || d.q == e;
      });
      if (all) roots.push_back(e);
    }
    if (roots.size() != 1) throw std::logic_error("vertex " + std::to_string(v) + " has no recognizable role");
    int x = idx[roots[0]];
    if (c.p[x] != 0) throw std::logic_error("collapsed pyramid at an end with a pyramid");
    c.p[x] = 1;
    assign(v, "single " + std::to_string(roots[0]));
  }
  if (c.dimension() != static_cast<int>(verts.size()))
    throw std::logic_error("card dimension does not match the vertex count");
  return a;
}

inline ClusterCard canonical_card(const ClusterCard& raw) {
  const int m = raw.n_e;
  if (m > 9) throw std::length_error("too many end vertices for card canonization");
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  ClusterCard best = raw;
  do {
    ClusterCard c = raw;
    for (int x = 0; x < m; ++x) {
      c.t[x] = raw.t[perm[x]];
      c.p[x] = raw.p[perm[x]];
      for (int y = 0; y < m; ++y) {
        c.B[x][y] = raw.B[perm[x]][perm[y]];
        c.D[x][y] = raw.D[perm[x]][perm[y]];
      }
    }
    if (c < best) best = std::move(c);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline void require_cluster(const BaseFamily& f) {
  if (!is_cluster(f)) throw std::invalid_argument("family is not a cluster");
}

}  // namespace detail

inline ClusterCard compute_card(const BaseFamily& f) {
  detail::require_cluster(f);
  return detail::canonical_card(detail::anatomy(f).raw);
}

// Role of every vertex in the card decomposition (end, t-center, triangle, trey E, bridge E,D, ...).
inline std::map<int, std::string> vertex_roles(const BaseFamily& f) {
  detail::require_cluster(f);
  return detail::anatomy(f).role;
}

inline bool equivalent(const BaseFamily& a, const BaseFamily& b) { return compute_card(a) == compute_card(b); }

// Sum of coeffs[m] times the m-th member (members() order).
inline LieStructure synthesize(const BaseFamily& f, const std::vector<Rational>& coeffs) {
  detail::require_compatible(f);
  auto ms = f.members();
  if (coeffs.size() != ms.size()) throw std::invalid_argument("one coefficient per member required");
  LieStructure g(f.dim);
  for (std::size_t a = 0; a < ms.size(); ++a) g += coeffs[a] * realize(ms[a], f.dim);
  if (!is_jacobi(g)) throw std::logic_error("synthesized structure violates Jacobi");
  return g;
}

struct CoaxialIdeals {
  std::map<std::string, std::vector<int>> spans;
  std::vector<std::string> non_ideals;
  bool center_ok = false;
  int radical_derived_length = 0;
  bool quotient_ok = false;

  // -1 when the radical span is not solvable.
  bool ok() const {
    return non_ideals.empty() && center_ok && radical_derived_length >= 0 && radical_derived_length <= 3 && quotient_ok;
  }
};

namespace detail {

inline Basis coordinate_span(const std::vector<int>& vs, int n) {
  Basis b;
  for (int v : vs) b.push_back(unit(n, v - 1));
  return b;
}

// Structure on the coordinates vs (1-based), keeping only components along vs.
inline LieStructure coordinate_restriction(const LieStructure& g, const std::vector<int>& vs) {
  std::map<int, int> pos;
  for (std::size_t a = 0; a < vs.size(); ++a) pos[vs[a]] = static_cast<int>(a) + 1;
  LieStructure r(std::max<int>(1, static_cast<int>(vs.size())));
  for (const auto& [key, c] : g.constants())
    if (pos.count(key[0]) && pos.count(key[1]) && pos.count(key[2])) r.add(pos[key[0]], pos[key[1]], pos[key[2]], c);
  return r;
}

}  // namespace detail

// Spans of the basic ideals of a coaxial algebra whose family is a cluster, each checked in g.
inline CoaxialIdeals coaxial_ideals(const BaseFamily& f, const std::vector<Rational>& coeffs) {
  detail::require_cluster(f);
  LieStructure g = synthesize(f, coeffs);
  const int n = f.dim;
  auto an = detail::anatomy(f);
  std::set<int> tri;
  for (const auto& t : an.triangles) tri.insert(t.begin(), t.end());
  auto has_dee = [&](int p, int q) {
    return std::any_of(f.dees.begin(), f.dees.end(), [&](const Dee& d) { return d.p == p && d.q == q; });
  };
  auto is_double = [&](int a, int b) { return has_dee(a, b) && has_dee(b, a); };

  BaseFamily h{n, {}, {}}, rt{n, {}, {}}, rest_h{n, {}, {}}, rest_rt{n, {}, {}}, rest_both{n, {}, {}};
  for (const auto& t : f.tees) {
    bool in_h = tri.count(t.i) && tri.count(t.j);
    bool in_rt = is_double(t.i, t.j);
    (in_h ? h : rest_h).tees.push_back(t);
    (in_rt ? rt : rest_rt).tees.push_back(t);
    if (!in_h && !in_rt) rest_both.tees.push_back(t);
  }
  for (const auto& d : f.dees) {
    bool in_rt = is_double(d.p, d.q);
    (in_rt ? rt : rest_rt).dees.push_back(d);
    rest_h.dees.push_back(d);
    if (!in_rt) rest_both.dees.push_back(d);
  }
  // Vertices outside S(F) and t-centers are central; they go with the solvable spans.
  std::set<int> central(an.t_centers.begin(), an.t_centers.end());
  auto sf = f.vertices();
  for (int v = 1; v <= n; ++v)
    if (!sf.count(v)) central.insert(v);
  auto with_central = [&](const BaseFamily& part) {
    auto s = part.vertices();
    s.insert(central.begin(), central.end());
    return std::vector<int>(s.begin(), s.end());
  };
  auto plain = [](const BaseFamily& part) {
    auto s = part.vertices();
    return std::vector<int>(s.begin(), s.end());
  };

  CoaxialIdeals r;
  r.spans["c"] = an.t_centers;
  r.spans["cd"] = an.d_centers;
  r.spans["h"] = plain(h);
  r.spans["rt"] = plain(rt);
  r.spans["rad"] = with_central(rest_h);
  r.spans["sr"] = with_central(rest_both);
  r.spans["0"] = with_central(rest_rt);
  for (const auto& [name, vs] : r.spans)
    if (!is_ideal(g, detail::coordinate_span(vs, n))) r.non_ideals.push_back(name);

  Basis z = center(g);
  r.center_ok = contains(z, detail::coordinate_span(an.t_centers, n));

  const auto& rad = r.spans["rad"];
  if (!rad.empty()) {
    auto series = derived_series(detail::coordinate_restriction(g, rad));
    r.radical_derived_length = series.back().empty() ? static_cast<int>(series.size()) : -1;
  }

  std::vector<int> quotient;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(rad.begin(), rad.end(), v)) quotient.push_back(v);
  if (quotient.empty()) {
    r.quotient_ok = an.triangles.empty();
  } else {
    LieStructure q = detail::coordinate_restriction(g, quotient);
    r.quotient_ok = static_cast<int>(quotient.size()) == 3 * static_cast<int>(an.triangles.size()) &&
                    det(killing_form(q)) != 0;
  }
  return r;
}

}  // namespace lieons
