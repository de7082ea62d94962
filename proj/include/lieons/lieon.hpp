#pragma once

#include <algorithm>
#include <compare>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "lie.hpp"

namespace lieons {

// Tee |i,j|k| = c x_k xi_i xi_j with i < j; swapping the ends negates the coefficient.
struct Tee {
  int i = 0, j = 0, k = 0;
  Rational coeff = 1;

  Tee() = default;
  Tee(int a, int b, int c, const Rational& s = 1) : i(a), j(b), k(c), coeff(s) {
    if (a == b || a == c || b == c) throw std::invalid_argument("tee vertices must be distinct");
    if (i > j) {
      std::swap(i, j);
      coeff = -coeff;
    }
  }
  bool same_shape(const Tee& o) const { return i == o.i && j == o.j && k == o.k; }
  auto key() const { return std::array<int, 3>{i, j, k}; }
  std::string str() const {
    return "|" + std::to_string(i) + "," + std::to_string(j) + "|" + std::to_string(k) + "|";
  }
};

// Dee |p|q| = c x_q xi_p xi_q, i.e. [e_p, e_q] = c e_q.
struct Dee {
  int p = 0, q = 0;
  Rational coeff = 1;

  Dee() = default;
  Dee(int a, int b, const Rational& s = 1) : p(a), q(b), coeff(s) {
    if (a == b) throw std::invalid_argument("dee vertices must be distinct");
  }
  bool same_shape(const Dee& o) const { return p == o.p && q == o.q; }
  auto key() const { return std::array<int, 2>{p, q}; }
  std::string str() const { return "|" + std::to_string(p) + "|" + std::to_string(q) + "|"; }
};

using BaseLieon = std::variant<Tee, Dee>;

inline std::string str(const BaseLieon& x) {
  return std::visit([](const auto& v) { return v.str(); }, x);
}

struct BaseFamily {
  int dim = 0;
  std::vector<Tee> tees;
  std::vector<Dee> dees;

  std::size_t size() const { return tees.size() + dees.size(); }
  std::vector<BaseLieon> members() const {
    std::vector<BaseLieon> out(tees.begin(), tees.end());
    out.insert(out.end(), dees.begin(), dees.end());
    return out;
  }
  std::set<int> vertices() const {
    std::set<int> s;
    for (const auto& t : tees) s.insert({t.i, t.j, t.k});
    for (const auto& d : dees) s.insert({d.p, d.q});
    return s;
  }
  void validate() const {
    auto ok = [&](int v) { return v >= 1 && v <= dim; };
    for (std::size_t a = 0; a < tees.size(); ++a) {
      if (!ok(tees[a].i) || !ok(tees[a].j) || !ok(tees[a].k)) throw std::out_of_range("tee vertex out of range");
      for (std::size_t b = a + 1; b < tees.size(); ++b)
        if (tees[a].same_shape(tees[b])) throw std::invalid_argument("duplicate tee");
    }
    for (std::size_t a = 0; a < dees.size(); ++a) {
      if (!ok(dees[a].p) || !ok(dees[a].q)) throw std::out_of_range("dee vertex out of range");
      for (std::size_t b = a + 1; b < dees.size(); ++b)
        if (dees[a].same_shape(dees[b])) throw std::invalid_argument("duplicate dee");
    }
  }
  std::string str() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& m : members()) {
      if (!first) os << " ";
      first = false;
      os << lieons::str(m);
    }
    os << "}";
    return os.str();
  }
};

inline LieStructure realize(const Tee& t, int n) {
  if (std::max({t.i, t.j, t.k}) > n || std::min({t.i, t.j, t.k}) < 1) throw std::out_of_range("tee outside basis");
  LieStructure g(n);
  g.add(t.i, t.j, t.k, t.coeff);
  return g;
}

inline LieStructure realize(const Dee& d, int n) {
  if (std::max(d.p, d.q) > n || std::min(d.p, d.q) < 1) throw std::out_of_range("dee outside basis");
  LieStructure g(n);
  g.add(d.p, d.q, d.q, d.coeff);
  return g;
}

inline LieStructure realize(const BaseLieon& x, int n) {
  return std::visit([n](const auto& v) { return realize(v, n); }, x);
}

namespace detail {

inline bool in2(int v, int a, int b) { return v == a || v == b; }

inline bool tee_tee(const Tee& a, const Tee& b) {
  if (a.same_shape(b)) return true;
  // a's center is an end of b while b's remaining end is not an end of a, or vice versa.
  auto blocks = [](const Tee& x, const Tee& y) {
    if (x.k == y.i) return !in2(y.j, x.i, x.j);
    if (x.k == y.j) return !in2(y.i, x.i, x.j);
    return false;
  };
  return !blocks(a, b) && !blocks(b, a);
}

inline bool tee_dee(const Tee& t, const Dee& d) {
  if (t.k == d.p && !in2(d.q, t.i, t.j)) return false;
  if (t.k == d.q && !in2(d.p, t.i, t.j)) return false;
  if (in2(d.q, t.i, t.j)) {
    int other = d.q == t.i ? t.j : t.i;
    if (!in2(other, d.p, d.q)) return false;
  }
  return true;
}

inline bool dee_dee(const Dee& a, const Dee& b) {
  if (a.p == b.q && a.q != b.p) return false;
  if (b.p == a.q && b.q != a.p) return false;
  return true;
}

}  // namespace detail

// Combinatorial compatibility of coaxial base lieons; coefficients play no role.
inline bool compatible_base(const BaseLieon& x, const BaseLieon& y) {
  struct V {
    bool operator()(const Tee& a, const Tee& b) const { return detail::tee_tee(a, b); }
    bool operator()(const Tee& a, const Dee& b) const { return detail::tee_dee(a, b); }
    bool operator()(const Dee& a, const Tee& b) const { return detail::tee_dee(b, a); }
    bool operator()(const Dee& a, const Dee& b) const { return detail::dee_dee(a, b); }
  };
  return std::visit(V{}, x, y);
}

inline bool family_is_compatible(const BaseFamily& f) {
  auto ms = f.members();
  for (std::size_t a = 0; a < ms.size(); ++a)
    for (std::size_t b = a + 1; b < ms.size(); ++b)
      if (!compatible_base(ms[a], ms[b])) return false;
  return true;
}

// Sum of the realized members with their coefficients.
inline LieStructure realize(const BaseFamily& f) {
  LieStructure g(f.dim);
  for (const auto& m : f.members()) g += realize(m, f.dim);
  return g;
}

// All tees |i,j|k| (i<j) followed by all dees |p|q| on vertices 1..n, unit coefficients.
inline std::vector<BaseLieon> all_base_lieons(int n) {
  std::vector<BaseLieon> out;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (k != i && k != j) out.emplace_back(Tee(i, j, k));
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q)
      if (p != q) out.emplace_back(Dee(p, q));
  return out;
}

// Tees with centers C_i (given as index sets of size n-2) and lines e_{l_i} inside them.
inline BaseFamily tight_pencil_family(int n, const std::vector<std::vector<int>>& centers,
                                      const std::vector<int>& lines) {
  if (centers.size() != lines.size()) throw std::invalid_argument("one line per center required");
  BaseFamily f{n, {}, {}};
  std::set<int> common;
  for (int v = 1; v <= n; ++v) common.insert(v);
  std::set<int> covered;
  for (std::size_t a = 0; a < centers.size(); ++a) {
    std::set<int> c(centers[a].begin(), centers[a].end());
    if (static_cast<int>(c.size()) != n - 2 || *c.begin() < 1 || *c.rbegin() > n)
      throw std::invalid_argument("center must be an (n-2)-subset of the basis");
    if (!c.count(lines[a])) throw std::invalid_argument("line must lie in its center");
    std::set<int> inter;
    std::set_intersection(common.begin(), common.end(), c.begin(), c.end(), std::inserter(inter, inter.end()));
    common = std::move(inter);
    covered.insert(c.begin(), c.end());
    std::vector<int> ends;
    for (int v = 1; v <= n; ++v)
      if (!c.count(v)) ends.push_back(v);
    f.tees.emplace_back(ends[0], ends[1], lines[a]);
  }
  bool copencil = static_cast<int>(covered.size()) <= n - 1;
  bool pencil = static_cast<int>(common.size()) >= n - 3;
  if (!centers.empty() && !copencil && !pencil) throw std::invalid_argument("centers form neither a pencil nor a co-pencil");
  return f;
}

}  // namespace lieons
