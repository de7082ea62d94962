#pragma once

#include <array>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "multivector.hpp"
#include "rational.hpp"

namespace lieons {

// Structure constants c_ij^k with i<j, indices 1-based.
class LieStructure {
 public:
  using Key = std::array<int, 3>;

  explicit LieStructure(int dim) : dim_(dim) {
    if (dim <= 0) throw std::invalid_argument("dimension must be positive");
  }

  int dim() const { return dim_; }
  const std::map<Key, Rational>& constants() const { return c_; }
  bool is_abelian() const { return c_.empty(); }

  // Adds c to c_ij^k, honouring c_ji^k = -c_ij^k.
  void add(int i, int j, int k, const Rational& c) {
    check(i);
    check(j);
    check(k);
    if (i == j || c == 0) return;
    Key key = i < j ? Key{i, j, k} : Key{j, i, k};
    Rational v = i < j ? c : Rational(-c);
    auto& slot = c_[key];
    slot += v;
    if (slot == 0) c_.erase(key);
  }

  Rational c(int i, int j, int k) const {
    if (i == j) return 0;
    auto it = c_.find(i < j ? Key{i, j, k} : Key{j, i, k});
    if (it == c_.end()) return 0;
    return i < j ? it->second : Rational(-it->second);
  }

  LieStructure& operator+=(const LieStructure& o) {
    same_dim(o);
    for (const auto& [key, v] : o.c_) add(key[0], key[1], key[2], v);
    return *this;
  }
  LieStructure& operator-=(const LieStructure& o) {
    same_dim(o);
    for (const auto& [key, v] : o.c_) add(key[0], key[1], key[2], -v);
    return *this;
  }
  friend LieStructure operator+(LieStructure a, const LieStructure& b) { return a += b; }
  friend LieStructure operator-(LieStructure a, const LieStructure& b) { return a -= b; }
  friend LieStructure operator*(const Rational& s, const LieStructure& a) {
    LieStructure r(a.dim_);
    if (s == 0) return r;
    for (const auto& [key, v] : a.c_) r.c_.emplace(key, s * v);
    return r;
  }
  friend bool operator==(const LieStructure& a, const LieStructure& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

  std::string str() const {
    if (c_.empty()) return "abelian(" + std::to_string(dim_) + ")";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, v] : c_) {
      if (!first) os << ", ";
      first = false;
      os << "[e" << key[0] << ",e" << key[1] << "]^" << key[2] << "=" << v.get_str();
    }
    return os.str();
  }

 private:
  void check(int i) const {
    if (i < 1 || i > dim_) throw std::out_of_range("basis index out of range");
  }
  void same_dim(const LieStructure& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
  }

  int dim_;
  std::map<Key, Rational> c_;
};

inline LieStructure sum(const LieStructure& a, const LieStructure& b) { return a + b; }

inline Vec bracket(const LieStructure& g, const Vec& u, const Vec& v) {
  const std::size_t n = g.dim();
  if (u.size() != n || v.size() != n) throw std::invalid_argument("vector length mismatch");
  Vec r(n, 0);
  for (const auto& [key, c] : g.constants()) {
    const int i = key[0] - 1, j = key[1] - 1, k = key[2] - 1;
    Rational w = u[i] * v[j] - u[j] * v[i];
    if (w != 0) r[k] += c * w;
  }
  return r;
}

// Matrix of ad u: column j is [u, e_j].
inline Mat ad(const LieStructure& g, const Vec& u) {
  const std::size_t n = g.dim();
  Mat m = zeros(n, n);
  for (const auto& [key, c] : g.constants()) {
    const int i = key[0] - 1, j = key[1] - 1, k = key[2] - 1;
    if (u[i] != 0) m[k][j] += c * u[i];
    if (u[j] != 0) m[k][i] -= c * u[j];
  }
  return m;
}

inline MultiVector to_bivector(const LieStructure& g) {
  MultiVector p(g.dim(), 2);
  for (const auto& [key, c] : g.constants())
    p.add({key[0], key[1]}, AffinePoly::x(key[2], c));
  return p;
}

inline LieStructure from_bivector(const MultiVector& p) {
  if (p.grade() != 2 && !p.is_zero()) throw std::invalid_argument("not a bivector");
  LieStructure g(p.dim());
  for (const auto& [m, a] : p.terms()) {
    if (a.constant != 0) throw std::invalid_argument("bivector has non-linear coefficients");
    auto idx = mask_indices(m);
    for (const auto& [k, c] : a.linear) g.add(idx[0], idx[1], k, c);
  }
  return g;
}

inline MultiVector jacobi_defect(const LieStructure& g) {
  auto p = to_bivector(g);
  return schouten(p, p);
}

inline bool is_jacobi(const LieStructure& g) { return jacobi_defect(g).is_zero(); }

// Cyclic sum [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] over all i<j<k.
inline bool cyclic_jacobi(const LieStructure& g) {
  const int n = g.dim();
  std::vector<Mat> adj;
  for (int i = 0; i < n; ++i) adj.push_back(ad(g, unit(n, i)));
  auto br = [&](int i, const Vec& v) { return adj[i] * v; };
  auto col = [&](int i, int j) {
    Vec v(n, 0);
    for (int k = 0; k < n; ++k) v[k] = adj[i][k][j];
    return v;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec s = br(i, col(j, k)) + br(j, col(k, i)) + br(k, col(i, j));
        if (!is_zero(s)) return false;
      }
  return true;
}

inline MultiVector compatibility_defect(const LieStructure& a, const LieStructure& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("dimension mismatch");
  return schouten(to_bivector(a), to_bivector(b));
}

inline bool compatible(const LieStructure& a, const LieStructure& b) {
  return compatibility_defect(a, b).is_zero();
}

// theta(e_u) = -tr ad e_u.
inline Vec modular_vector(const LieStructure& g) {
  Vec theta(g.dim(), 0);
  for (const auto& [key, c] : g.constants()) {
    if (key[2] == key[1]) theta[key[0] - 1] -= c;
    if (key[2] == key[0]) theta[key[1] - 1] += c;
  }
  return theta;
}

struct ModularSplit {
  LieStructure uni;
  LieStructure non;
  Vec theta;
  Vec nu;
  Mat A;
};

// Structure [u,v] = f(u) B v - f(v) B u.
inline LieStructure rank_two_structure(const Vec& f, const Mat& b) {
  const int n = static_cast<int>(f.size());
  LieStructure s(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Rational v = f[i] * b[k][j] - f[j] * b[k][i];
        if (v != 0) s.add(i + 1, j + 1, k + 1, v);
      }
  return s;
}

inline ModularSplit modular_split(const LieStructure& g) {
  const int n = g.dim();
  Vec theta = modular_vector(g);
  int idx = -1;
  for (int i = 0; i < n; ++i)
    if (theta[i] != 0) {
      idx = i;
      break;
    }
  if (idx < 0) throw std::domain_error("already unimodular");
  Vec nu = Rational(1) / theta[idx] * unit(n, idx);
  Mat a = ad(g, nu);
  LieStructure non = rank_two_structure(theta, a);
  return ModularSplit{g - non, non, theta, nu, a};
}

inline Basis derived_algebra(const LieStructure& g) {
  const int n = g.dim();
  Basis vs;
  std::map<std::pair<int, int>, Vec> cols;
  for (const auto& [key, c] : g.constants()) {
    auto& v = cols[{key[0], key[1]}];
    if (v.empty()) v.assign(n, 0);
    v[key[2] - 1] += c;
  }
  for (auto& [ij, v] : cols) vs.push_back(v);
  return span_basis(vs, n);
}

inline Basis center(const LieStructure& g) {
  const int n = g.dim();
  Mat rows;
  for (int i = 0; i < n; ++i) {
    Mat a = ad(g, unit(n, i));
    // [e_i, z] = 0 for all i.
    for (auto& row : a) rows.push_back(row);
  }
  return span_basis(nullspace(rows, n), n);
}

// Derived algebra of the subalgebra spanned by s.
inline Basis derived_of(const LieStructure& g, const Basis& s) {
  Basis vs;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) vs.push_back(bracket(g, s[i], s[j]));
  return span_basis(vs, g.dim());
}

inline std::vector<Basis> derived_series(const LieStructure& g) {
  std::vector<Basis> series;
  Basis cur = span_basis(Basis{}, g.dim());
  for (int i = 0; i < g.dim(); ++i) cur.push_back(unit(g.dim(), i));
  cur = span_basis(cur, g.dim());
  while (true) {
    Basis next = derived_of(g, cur);
    series.push_back(next);
    if (next.empty() || next.size() == cur.size()) break;
    cur = std::move(next);
  }
  return series;
}

inline bool is_solvable(const LieStructure& g) { return derived_series(g).back().empty(); }

inline bool is_subalgebra(const LieStructure& g, const Basis& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!in_span(s, bracket(g, s[i], s[j]))) return false;
  return true;
}

inline bool is_ideal(const LieStructure& g, const Basis& s) {
  const int n = g.dim();
  for (int i = 0; i < n; ++i)
    for (const auto& v : s)
      if (!in_span(s, bracket(g, unit(n, i), v))) return false;
  return true;
}

inline int lie_rank(const LieStructure& g) { return mv_rank(to_bivector(g)); }

enum class LieonKind { Fork, Dee, Abelian, Other };

struct LieonType {
  LieonKind kind;
  int n;
  std::string str() const {
    switch (kind) {
      case LieonKind::Fork: return "fork(" + std::to_string(n) + ")";
      case LieonKind::Dee: return "dee(" + std::to_string(n) + ")";
      case LieonKind::Abelian: return "abelian";
      default: return "other";
    }
  }
  bool is_lieon() const { return kind == LieonKind::Fork || kind == LieonKind::Dee; }
};

inline LieonType recognize_lieon(const LieStructure& g) {
  if (!is_jacobi(g)) throw std::invalid_argument("not a Lie structure");
  const int n = g.dim();
  Basis d = derived_algebra(g);
  if (d.empty()) return {LieonKind::Abelian, n};
  Basis z = center(g);
  if (d.size() != 1 || static_cast<int>(z.size()) != n - 2) return {LieonKind::Other, n};
  return in_span(z, d[0]) ? LieonType{LieonKind::Fork, n} : LieonType{LieonKind::Dee, n};
}

// e_1 spans gamma, e_2..e_{m+1} span V, [e_1, v] = A v.
inline LieStructure gamma_of_operator(const Mat& a) {
  const int m = static_cast<int>(a.size());
  LieStructure g(m + 1);
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(a[i].size()) != m) throw std::invalid_argument("non-square operator");
    for (int j = 0; j < m; ++j)
      if (a[i][j] != 0) g.add(1, j + 2, i + 2, a[i][j]);
  }
  return g;
}

// Structure constants of g in the basis given by the columns of t.
inline LieStructure change_basis(const LieStructure& g, const Mat& t) {
  const int n = g.dim();
  if (static_cast<int>(t.size()) != n) throw std::invalid_argument("basis change size mismatch");
  Mat tinv = inverse(t);
  Basis f;
  for (int a = 0; a < n; ++a) {
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = t[i][a];
    f.push_back(std::move(v));
  }
  LieStructure r(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Vec w = tinv * bracket(g, f[a], f[b]);
      for (int c = 0; c < n; ++c)
        if (w[c] != 0) r.add(a + 1, b + 1, c + 1, w[c]);
    }
  return r;
}

// The bilinear map (u,v) -> [u,v] expressed as a structure on a subspace basis, then carried
// back to ambient coordinates. keep(a,b,c) selects constants in the adapted basis.
template <class Keep>
inline LieStructure filter_in_basis(const LieStructure& g, const Mat& t, Keep keep) {
  LieStructure adapted = change_basis(g, t);
  LieStructure kept(g.dim());
  for (const auto& [key, c] : adapted.constants())
    if (keep(key[0], key[1], key[2])) kept.add(key[0], key[1], key[2], c);
  return change_basis(kept, inverse(t));
}

inline Mat killing_form(const LieStructure& g) {
  const int n = g.dim();
  std::vector<Mat> adj;
  for (int i = 0; i < n; ++i) adj.push_back(ad(g, unit(n, i)));
  Mat k = zeros(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      k[i][j] = trace(adj[i] * adj[j]);
      k[j][i] = k[i][j];
    }
  return k;
}

// Signs of a rational symmetric form after congruence diagonalization: (positive, negative, zero).
inline std::array<int, 3> inertia(Mat m) {
  const std::size_t n = m.size();
  std::array<int, 3> out{0, 0, 0};
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t p = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!done[i] && m[i][i] != 0) {
        p = i;
        break;
      }
    if (p == n) {
      // Make a diagonal entry nonzero using an off-diagonal one: e_i <- e_i + e_j.
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && m[i][j] != 0) {
            a = i;
            b = j;
            break;
          }
      if (a == n) break;
      for (std::size_t k = 0; k < n; ++k) m[a][k] += m[b][k];
      for (std::size_t k = 0; k < n; ++k) m[k][a] += m[k][b];
      p = a;
    }
    done[p] = true;
    ++out[m[p][p] > 0 ? 0 : 1];
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m[i][p] == 0) continue;
      Rational f = m[i][p] / m[p][p];
      for (std::size_t k = 0; k < n; ++k) m[i][k] -= f * m[p][k];
      for (std::size_t k = 0; k < n; ++k) m[k][i] -= f * m[k][p];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!done[i]) ++out[2];
  return out;
}

struct MatchQuadruple {
  int dimV = 0;
  Mat A;
  Mat B;
  Rational lambda = 0;
  // Covectors on V used when lambda = 0; empty means zero.
  Vec nu1;
  Vec nu2;
};

inline void validate(const MatchQuadruple& q) {
  const std::size_t m = q.dimV;
  auto square = [m](const Mat& x) {
    if (x.size() != m) return false;
    for (const auto& r : x)
      if (r.size() != m) return false;
    return true;
  };
  if (q.dimV < 0 || !square(q.A) || !square(q.B)) throw std::invalid_argument("quadruple: bad operator sizes");
  if (commutator(q.A, q.B) != 2 * q.lambda * q.A) throw std::invalid_argument("quadruple: [A,B] != 2*lambda*A");
  if (trace(q.B) != 2 * (1 + q.lambda)) throw std::invalid_argument("quadruple: tr B != 2(1+lambda)");
  for (const Vec* nu : {&q.nu1, &q.nu2}) {
    if (nu->empty()) continue;
    if (q.lambda != 0) throw std::invalid_argument("quadruple: nu requires lambda = 0");
    if (nu->size() != m) throw std::invalid_argument("quadruple: bad nu size");
    if (!is_zero(q.A * *nu)) throw std::invalid_argument("quadruple: nu not in ker A");
  }
  if (q.lambda == 0 && trace(q.A) != 0) throw std::invalid_argument("quadruple: tr A != 0");
}

// Coordinates y_1..y_m on V_1^*, then phi_1, phi_2 dual to theta_1, theta_2.
inline std::pair<LieStructure, LieStructure> matching_from_quadruple(const MatchQuadruple& q) {
  validate(q);
  const int m = q.dimV;
  const int n = m + 2;
  const int p1 = m + 1, p2 = m + 2;
  using Field = std::vector<AffinePoly>;
  auto linear_field = [&](const Mat& h) {
    Field f(n);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b) f[a].add_linear(b + 1, h[b][a]);
    return f;
  };
  auto covector = [&](const Vec& nu) {
    AffinePoly f;
    for (int a = 0; a < static_cast<int>(nu.size()); ++a) f.add_linear(a + 1, nu[a]);
    return f;
  };
  const Rational& lam = q.lambda;
  Field z = linear_field(q.A);
  Field w = linear_field(q.B);
  z[p1 - 1] = AffinePoly::x(p1, lam);
  z[p2 - 1] = AffinePoly::x(p2, -lam);
  w[p1 - 1] = AffinePoly::x(p1, -lam) + covector(q.nu1);
  w[p2 - 1] = AffinePoly::x(p2, -lam) + covector(q.nu2);
  const Rational half(1, 2);
  auto pair_with = [&](const Field& x, int xi) {
    MultiVector p(n, 2);
    for (int a = 1; a <= n; ++a)
      if (a != xi) p.add({a, xi}, x[a - 1]);
    return from_bivector(p);
  };
  Field x1(n), x2(n);
  for (int a = 0; a < n; ++a) {
    x1[a] = half * (z[a] + w[a]);
    x2[a] = half * (w[a] - z[a]);
  }
  return {pair_with(x1, p1), pair_with(x2, p2)};
}

}  // namespace lieons
