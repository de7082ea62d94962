#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace lieons {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major
using Basis = std::vector<Vec>;

inline Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Mat zeros(std::size_t r, std::size_t c) { return Mat(r, Vec(c, 0)); }

inline Mat identity(std::size_t n) {
  Mat m = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline std::size_t cols(const Mat& m) { return m.empty() ? 0 : m[0].size(); }

inline Mat transpose(const Mat& a) {
  Mat t = zeros(cols(a), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline Mat operator*(const Mat& a, const Mat& b) {
  if (cols(a) != b.size()) throw std::invalid_argument("matrix size mismatch");
  Mat c = zeros(a.size(), cols(b));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols(b); ++j)
        if (b[k][j] != 0) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

inline Vec operator*(const Mat& a, const Vec& v) {
  if (cols(a) != v.size() && !a.empty()) throw std::invalid_argument("matrix size mismatch");
  Vec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (a[i][j] != 0 && v[j] != 0) r[i] += a[i][j] * v[j];
  return r;
}

inline Mat operator+(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b.at(i).at(j);
  return c;
}

inline Mat operator-(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] -= b.at(i).at(j);
  return c;
}

inline Mat operator*(const Rational& s, const Mat& a) {
  Mat c = a;
  for (auto& row : c)
    for (auto& x : row) x *= s;
  return c;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  Vec c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += b.at(i);
  return c;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  Vec c = a;
  for (std::size_t i = 0; i < a.size(); ++i) c[i] -= b.at(i);
  return c;
}

inline Vec operator*(const Rational& s, const Vec& a) {
  Vec c = a;
  for (auto& x : c) x *= s;
  return c;
}

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b.at(i);
  return s;
}

inline Rational trace(const Mat& a) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i][i];
  return s;
}

inline Mat commutator(const Mat& a, const Mat& b) { return a * b - b * a; }

// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  const std::size_t nc = cols(m);
  for (std::size_t c = 0; c < nc && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = c; j < nc; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  return pivots;
}

inline std::size_t rank(Mat m) { return rref(m).size(); }

inline Rational det(Mat m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      d = -d;
    }
    d *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return d;
}

// Basis of {x : m x = 0}.
inline Basis nullspace(const Mat& m, std::size_t ncols) {
  Mat r = m;
  for (auto& row : r) row.resize(ncols, 0);
  auto piv = rref(r);
  std::vector<bool> is_piv(ncols, false);
  for (auto p : piv) is_piv[p] = true;
  Basis out;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    Vec v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][f];
    out.push_back(std::move(v));
  }
  return out;
}

inline Mat inverse(const Mat& a) {
  const std::size_t n = a.size();
  Mat aug = zeros(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw std::invalid_argument("non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = a[i][j];
    aug[i][n + i] = 1;
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Mat inv = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

// Reduced echelon basis of the span of the given vectors.
inline Basis span_basis(const Basis& vs, std::size_t n) {
  Mat m = vs;
  for (auto& row : m) row.resize(n, 0);
  rref(m);
  return m;
}

inline bool in_span(const Basis& b, const Vec& v) {
  if (is_zero(v)) return true;
  Mat m = b;
  m.push_back(v);
  return rank(m) == rank(b);
}

inline bool contains(const Basis& big, const Basis& small) {
  for (const auto& v : small)
    if (!in_span(big, v)) return false;
  return true;
}

// Columns of the matrix are the given vectors.
inline Mat from_columns(const Basis& vs, std::size_t n) {
  Mat m = zeros(n, vs.size());
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m[i][j] = vs[j].at(i);
  return m;
}

// Coordinates of v in the (independent) family b; throws if v is outside the span.
inline Vec coordinates(const Basis& b, const Vec& v) {
  const std::size_t n = v.size();
  const std::size_t k = b.size();
  Mat aug = zeros(n, k + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) aug[i][j] = b[j].at(i);
    aug[i][k] = v[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == k) throw std::domain_error("vector outside span");
  if (piv.size() != k) throw std::domain_error("dependent family");
  Vec x(k, 0);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug[i][k];
  return x;
}

// Basis of a subspace that prefers coordinate vectors lying in it, completed by echelon rows.
inline Basis adapted_basis(const Basis& sub, std::size_t n) {
  Basis ech = span_basis(sub, n);
  Basis out;
  for (std::size_t i = 0; i < n && out.size() < ech.size(); ++i) {
    Vec e = unit(n, i);
    if (!in_span(ech, e)) continue;
    Basis trial = out;
    trial.push_back(e);
    if (rank(trial) == trial.size()) out = std::move(trial);
  }
  for (const auto& v : ech) {
    if (out.size() == ech.size()) break;
    Basis trial = out;
    trial.push_back(v);
    if (rank(trial) == trial.size()) out = std::move(trial);
  }
  return out;
}

// Extends an independent family to a basis of k^n using coordinate vectors.
inline Basis extend_to_basis(const Basis& b, std::size_t n) {
  Basis out = b;
  for (std::size_t i = 0; i < n && out.size() < n; ++i) {
    Basis trial = out;
    trial.push_back(unit(n, i));
    if (rank(trial) == trial.size()) out = std::move(trial);
  }
  return out;
}

}  // namespace lieons
