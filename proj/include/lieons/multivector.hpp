#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace lieons {

// c + sum_i l_i x_i, indices 1-based.
struct AffinePoly {
  Rational constant = 0;
  std::map<int, Rational> linear;

  static AffinePoly constant_of(const Rational& c) { return AffinePoly{c, {}}; }
  static AffinePoly x(int i, const Rational& c = 1) {
    AffinePoly p;
    if (c != 0) p.linear[i] = c;
    return p;
  }

  bool is_zero() const { return constant == 0 && linear.empty(); }
  bool is_constant() const { return linear.empty(); }
  Rational coeff(int i) const {
    auto it = linear.find(i);
    return it == linear.end() ? Rational(0) : it->second;
  }

  AffinePoly& operator+=(const AffinePoly& o) {
    constant += o.constant;
    for (const auto& [i, c] : o.linear) add_linear(i, c);
    return *this;
  }
  AffinePoly& operator-=(const AffinePoly& o) { return *this += (-1) * o; }
  void add_linear(int i, const Rational& c) {
    if (c == 0) return;
    auto& slot = linear[i];
    slot += c;
    if (slot == 0) linear.erase(i);
  }

  friend AffinePoly operator*(const Rational& s, const AffinePoly& p) {
    if (s == 0) return {};
    AffinePoly r = p;
    r.constant *= s;
    for (auto& [i, c] : r.linear) c *= s;
    return r;
  }
  friend AffinePoly operator+(AffinePoly a, const AffinePoly& b) { return a += b; }
  friend AffinePoly operator-(AffinePoly a, const AffinePoly& b) { return a -= b; }
  friend bool operator==(const AffinePoly& a, const AffinePoly& b) {
    return a.constant == b.constant && a.linear == b.linear;
  }

  // Product of two affine polynomials; throws if the result is quadratic.
  friend AffinePoly operator*(const AffinePoly& a, const AffinePoly& b) {
    if (!a.linear.empty() && !b.linear.empty()) throw std::domain_error("non-affine product");
    AffinePoly r = a.constant * b;
    r += b.constant * AffinePoly{0, a.linear};
    return r;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    if (constant != 0 || linear.empty()) {
      os << constant.get_str();
      first = false;
    }
    for (const auto& [i, c] : linear) {
      if (!first) os << (c < 0 ? " - " : " + ");
      else if (c < 0) os << "-";
      Rational a = abs(c);
      if (a != 1) os << a.get_str() << "*";
      os << "x" << i;
      first = false;
    }
    return os.str();
  }
};

using WedgeMask = std::uint64_t;

inline std::vector<int> mask_indices(WedgeMask m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b + 1);
    m &= m - 1;
  }
  return out;
}

// Sign of xi_a * xi_b reordered to increasing order; a, b disjoint.
inline int wedge_sign(WedgeMask a, WedgeMask b) {
  int swaps = 0;
  while (b) {
    int j = std::countr_zero(b);
    swaps += std::popcount(a >> (j + 1));
    b &= b - 1;
  }
  return (swaps & 1) ? -1 : 1;
}

class MultiVector {
 public:
  static constexpr int kMaxDim = 64;

  MultiVector(int dim, int grade) : dim_(dim), grade_(grade) {
    if (dim <= 0 || dim > kMaxDim) throw std::invalid_argument("dimension out of range");
    if (grade < 0 || grade > dim) throw std::invalid_argument("grade out of range");
  }

  // coeff * xi_{i1} ... xi_{ig}, indices in any order (sign from sorting).
  static MultiVector monomial(int dim, const std::vector<int>& idx, const AffinePoly& coeff) {
    MultiVector m(dim, static_cast<int>(idx.size()));
    m.add(idx, coeff);
    return m;
  }

  int dim() const { return dim_; }
  int grade() const { return grade_; }
  const std::map<WedgeMask, AffinePoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const std::vector<int>& idx, const AffinePoly& coeff) {
    if (static_cast<int>(idx.size()) != grade_) throw std::invalid_argument("grade mismatch");
    WedgeMask m = 0;
    int sign = 1;
    for (int i : idx) {
      check_index(i);
      WedgeMask bit = WedgeMask(1) << (i - 1);
      if (m & bit) return;
      sign *= wedge_sign(m, bit);
      m |= bit;
    }
    add_mask(m, sign == 1 ? coeff : Rational(-1) * coeff);
  }

  void add_mask(WedgeMask m, const AffinePoly& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, coeff);
      return;
    }
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }

  AffinePoly coeff(const std::vector<int>& idx) const {
    MultiVector probe(dim_, grade_);
    probe.add(idx, AffinePoly::constant_of(1));
    if (probe.is_zero()) return {};
    auto [m, s] = *probe.terms_.begin();
    auto it = terms_.find(m);
    if (it == terms_.end()) return {};
    return s.constant * it->second;
  }

  MultiVector& operator+=(const MultiVector& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_mask(m, c);
    return *this;
  }
  MultiVector& operator-=(const MultiVector& o) {
    check_same(o);
    for (const auto& [m, c] : o.terms_) add_mask(m, Rational(-1) * c);
    return *this;
  }
  friend MultiVector operator+(MultiVector a, const MultiVector& b) { return a += b; }
  friend MultiVector operator-(MultiVector a, const MultiVector& b) { return a -= b; }
  friend MultiVector operator*(const Rational& s, const MultiVector& a) {
    MultiVector r(a.dim_, a.grade_);
    if (s == 0) return r;
    for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
    return r;
  }
  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_ && (a.grade_ == b.grade_ || a.terms_.empty());
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.str() << ")";
      for (int i : mask_indices(m)) os << "*xi" << i;
    }
    return os.str();
  }

  void check_index(int i) const {
    if (i < 1 || i > dim_) throw std::out_of_range("coordinate index out of range");
  }

 private:
  void check_same(const MultiVector& o) {
    if (o.dim_ != dim_) throw std::invalid_argument("dimension mismatch");
    if (o.grade_ != grade_ && !o.terms_.empty() && !terms_.empty())
      throw std::invalid_argument("grade mismatch");
    if (terms_.empty()) grade_ = o.grade_;
  }

  int dim_;
  int grade_;
  std::map<WedgeMask, AffinePoly> terms_;
};

inline MultiVector wedge(const MultiVector& p, const MultiVector& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
  if (p.grade() + q.grade() > p.dim()) return MultiVector(p.dim(), p.dim());
  MultiVector r(p.dim(), p.grade() + q.grade());
  for (const auto& [a, ca] : p.terms())
    for (const auto& [b, cb] : q.terms()) {
      if (a & b) continue;
      AffinePoly c = ca * cb;
      r.add_mask(a | b, wedge_sign(a, b) == 1 ? c : Rational(-1) * c);
    }
  return r;
}

inline MultiVector d_dx(const MultiVector& p, int i) {
  p.check_index(i);
  MultiVector r(p.dim(), p.grade());
  for (const auto& [m, c] : p.terms()) r.add_mask(m, AffinePoly::constant_of(c.coeff(i)));
  return r;
}

// Left derivative in xi_i.
inline MultiVector d_dxi(const MultiVector& p, int i) {
  p.check_index(i);
  if (p.grade() == 0) return MultiVector(p.dim(), 0);
  MultiVector r(p.dim(), p.grade() - 1);
  const WedgeMask bit = WedgeMask(1) << (i - 1);
  for (const auto& [m, c] : p.terms()) {
    if (!(m & bit)) continue;
    int before = std::popcount(m & (bit - 1));
    r.add_mask(m & ~bit, (before & 1) ? Rational(-1) * c : c);
  }
  return r;
}

// [[P,Q]] = -sum_i ( dP/dx_i ^ dQ/dxi_i + (-1)^p dP/dxi_i ^ dQ/dx_i ), evaluated term by term.
inline MultiVector schouten(const MultiVector& p, const MultiVector& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("dimension mismatch");
  const int g = p.grade() + q.grade() - 1;
  if (g < 0) return MultiVector(p.dim(), 0);
  if (g > p.dim()) return MultiVector(p.dim(), p.dim());
  MultiVector r(p.dim(), g);
  const Rational sp = (p.grade() % 2) ? Rational(1) : Rational(-1);  // -(-1)^p
  for (const auto& [m1, a1] : p.terms()) {
    for (const auto& [m2, a2] : q.terms()) {
      for (const auto& [i, c] : a1.linear) {
        const WedgeMask bit = WedgeMask(1) << (i - 1);
        if (!(m2 & bit)) continue;
        WedgeMask rest = m2 & ~bit;
        if (m1 & rest) continue;
        int s = wedge_sign(m1, rest) * ((std::popcount(m2 & (bit - 1)) & 1) ? -1 : 1);
        r.add_mask(m1 | rest, Rational(-s) * c * a2);
      }
      for (const auto& [i, c] : a2.linear) {
        const WedgeMask bit = WedgeMask(1) << (i - 1);
        if (!(m1 & bit)) continue;
        WedgeMask rest = m1 & ~bit;
        if (rest & m2) continue;
        int s = wedge_sign(rest, m2) * ((std::popcount(m1 & (bit - 1)) & 1) ? -1 : 1);
        r.add_mask(rest | m2, Rational(s) * sp * c * a1);
      }
    }
  }
  return r;
}

namespace detail {

// Sparse polynomial: exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, Rational>;

inline void poly_add(Poly& acc, const std::vector<int>& e, const Rational& c) {
  if (c == 0) return;
  auto& slot = acc[e];
  slot += c;
  if (slot == 0) acc.erase(e);
}

inline Poly poly_times_affine(const Poly& p, const AffinePoly& a, int sign) {
  Poly r;
  for (const auto& [e, c] : p) {
    if (a.constant != 0) poly_add(r, e, sign * c * a.constant);
    for (const auto& [i, l] : a.linear) {
      auto e2 = e;
      e2[i - 1] += 1;
      poly_add(r, e2, sign * c * l);
    }
  }
  return r;
}

}  // namespace detail

// 2k with P^k != 0 and P^(k+1) = 0 as formal wedge powers with polynomial coefficients.
inline int mv_rank(const MultiVector& p) {
  if (p.grade() != 2) throw std::invalid_argument("mv_rank expects a bivector");
  const int n = p.dim();
  std::map<WedgeMask, detail::Poly> power;
  power[0][std::vector<int>(n, 0)] = 1;
  int k = 0;
  while (true) {
    std::map<WedgeMask, detail::Poly> next;
    for (const auto& [m, poly] : power)
      for (const auto& [m2, a] : p.terms()) {
        if (m & m2) continue;
        auto prod = detail::poly_times_affine(poly, a, wedge_sign(m, m2));
        auto& slot = next[m | m2];
        for (const auto& [e, c] : prod) detail::poly_add(slot, e, c);
      }
    for (auto it = next.begin(); it != next.end();) it = it->second.empty() ? next.erase(it) : std::next(it);
    if (next.empty()) return 2 * k;
    power = std::move(next);
    ++k;
  }
}

}  // namespace lieons
