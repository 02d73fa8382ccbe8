#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "albert/error.hpp"
#include "albert/rational.hpp"

namespace albert {

using QVec = std::vector<Rational>;

inline QVec qvec_zero(std::size_t n) { return QVec(n, Rational(0)); }

inline QVec operator+(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw descriptor_mismatch("vector size mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec operator-(const QVec& a, const QVec& b) {
  if (a.size() != b.size()) throw descriptor_mismatch("vector size mismatch");
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec operator*(const Rational& s, const QVec& a) {
  QVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

inline bool is_zero(const QVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

inline std::string qvec_str(const QVec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(v[i]);
  }
  return s + "]";
}

// Dense exact-rational matrix, row-major. Sizes here stay <= ~30, so plain
// Gaussian elimination is enough; pivoting just takes the first nonzero.
struct QMat {
  std::size_t rows = 0, cols = 0;
  std::vector<Rational> a;

  QMat() = default;
  QMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rational(0)) {}

  Rational& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  static QMat identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  bool operator==(const QMat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  bool is_identity() const {
    if (rows != cols) return false;
    return *this == identity(rows);
  }

  QMat transpose() const {
    QMat t(cols, rows);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }
};

inline QVec mul(const QMat& m, const QVec& v) {
  if (m.cols != v.size()) throw descriptor_mismatch("matrix/vector size mismatch");
  QVec r(m.rows, Rational(0));
  for (std::size_t i = 0; i < m.rows; ++i) {
    Rational s(0);
    for (std::size_t j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0 && v[j] != 0) s += m.at(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

inline QMat mul(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) throw descriptor_mismatch("matrix size mismatch");
  QMat r(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const Rational& xik = x.at(i, k);
      if (xik == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        if (y.at(k, j) != 0) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

inline QMat operator*(const QMat& x, const QMat& y) { return mul(x, y); }

inline QMat scale(const Rational& s, const QMat& m) {
  QMat r = m;
  for (auto& x : r.a) x *= s;
  return r;
}

// Gauss-Jordan to reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(QMat& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t p = row;
    while (p < m.rows && m.at(p, col) == 0) ++p;
    if (p == m.rows) continue;
    for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(row, j));
    Rational inv = Rational(1) / m.at(row, col);
    for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(QMat m) { return rref(m).size(); }

inline Rational det(QMat m) {
  if (m.rows != m.cols) throw parameter_error("determinant of non-square matrix");
  Rational d(1);
  std::size_t n = m.rows;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && m.at(p, col) == 0) ++p;
    if (p == n) return Rational(0);
    if (p != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rational inv = Rational(1) / m.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

inline QMat inverse(const QMat& m) {
  if (m.rows != m.cols) throw parameter_error("inverse of non-square matrix");
  std::size_t n = m.rows;
  QMat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || pivots.back() != n - 1)
    throw not_invertible("singular matrix");
  QMat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

inline QVec solve(const QMat& m, const QVec& b) {
  if (m.rows != b.size()) throw descriptor_mismatch("solve size mismatch");
  QMat aug(m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[i];
  }
  auto pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols)
    throw not_invertible("inconsistent linear system");
  QVec x(m.cols, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug.at(r, m.cols);
  return x;  // one solution; free variables set to 0
}

// Basis of the right nullspace. Each basis vector has value 1 at "its" free
// column and 0 at every other free column, which callers exploit to read
// coordinates back off without solving.
struct Nullspace {
  std::vector<QVec> basis;
  std::vector<std::size_t> free_cols;
};

inline Nullspace nullspace(QMat m) {
  std::size_t cols = m.cols;
  auto pivots = rref(m);
  Nullspace ns;
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) ns.free_cols.push_back(c);
  for (auto fc : ns.free_cols) {
    QVec v(cols, Rational(0));
    v[fc] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, fc);
    ns.basis.push_back(std::move(v));
  }
  return ns;
}

}  // namespace albert
