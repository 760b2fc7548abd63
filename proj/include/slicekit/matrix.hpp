#pragma once
/**
 * @file matrix.hpp
 * @brief Small dense matrices over exact rings, with fraction-free determinants,
 *        maximal-minor gcds and a row Hermite normal form.
 *
 * Sizes in this library never exceed a handful of rows, so everything is dense
 * and row-major. Integer arithmetic goes through the checked helpers.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "checked.hpp"

namespace slicekit {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(i * m.cols_));
    }
    return m;
  }

  static Matrix identity(std::size_t n, const T& one = T{1}) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
  }
  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using IntVector = std::vector<Int>;

// Ring hooks for bareiss_determinant. Overloads for class types live next to
// the type and are found by argument-dependent lookup.
inline Int ring_mul(Int a, Int b) { return checked_mul(a, b); }
inline Int ring_sub(Int a, Int b) { return checked_sub(a, b); }
inline Int ring_neg(Int a) { return checked_neg(a); }
inline Int ring_exact_div(Int a, Int b) {
  if (b == 0 || a % b != 0) throw std::logic_error("inexact integer division in Bareiss step");
  return a / b;
}
inline bool ring_is_zero(Int a) { return a == 0; }

/// Bareiss fraction-free determinant over any exact integral domain.
/// Needs ring_mul, ring_sub, ring_neg, ring_exact_div and ring_is_zero overloads for T.
template <class T>
T bareiss_determinant(Matrix<T> a, const T& one) {
  if (!a.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return one;
  T prev = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (ring_is_zero(a(k, k))) {
      std::size_t p = k + 1;
      while (p < n && ring_is_zero(a(p, k))) ++p;
      if (p == n) return T{};
      a.swap_rows(k, p);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = ring_exact_div(ring_sub(ring_mul(a(i, j), a(k, k)), ring_mul(a(i, k), a(k, j))), prev);
      }
      a(i, k) = T{};
    }
    prev = a(k, k);
  }
  T det = a(n - 1, n - 1);
  return negate ? ring_neg(det) : det;
}

inline Int determinant(const IntMatrix& a) { return bareiss_determinant<Int>(a, 1); }

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Int s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s = checked_add(s, checked_mul(a(i, k), b(k, j)));
      c(i, j) = s;
    }
  return c;
}

inline IntVector multiply(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("matrix/vector dimension mismatch");
  IntVector out(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) out[i] = checked_add(out[i], checked_mul(a(i, k), v[k]));
  return out;
}

inline Int dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

inline Int content(const IntVector& v) {
  Int g = 0;
  for (Int x : v) g = gcd(g, x);
  return g;
}

/// gcd of all k x k minors of the k x n matrix whose rows are `vectors`.
/// The rows span a rank-k direct summand of Z^n exactly when this equals 1.
inline Int maximal_minor_gcd(const std::vector<IntVector>& vectors) {
  const std::size_t k = vectors.size();
  if (k == 0) return 1;
  const std::size_t n = vectors.front().size();
  if (k > n) return 0;
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  Int g = 0;
  while (true) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = vectors[i][cols[j]];
    g = gcd(g, determinant(minor));
    if (g == 1) return 1;
    // next k-subset of {0..n-1} in lexicographic order
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g;
}

inline bool is_direct_summand(const std::vector<IntVector>& vectors) { return maximal_minor_gcd(vectors) == 1; }

/// Row Hermite normal form: upper echelon, positive pivots, entries above each
/// pivot reduced into [0, pivot). Zero rows are dropped. Two integer row
/// lattices are equal iff their forms are equal.
inline IntMatrix hermite_normal_form(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    // Euclid on column c among rows r..m-1
    while (true) {
      std::size_t piv = m;
      for (std::size_t i = r; i < m; ++i)
        if (a(i, c) != 0 && (piv == m || checked_abs(a(i, c)) < checked_abs(a(piv, c)))) piv = i;
      if (piv == m) break;
      a.swap_rows(r, piv);
      bool done = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (a(i, c) == 0) continue;
        Int q = a(i, c) / a(r, c);
        for (std::size_t j = c; j < n; ++j) a(i, j) = checked_sub(a(i, j), checked_mul(q, a(r, j)));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0)
      for (std::size_t j = c; j < n; ++j) a(r, j) = checked_neg(a(r, j));
    for (std::size_t i = 0; i < r; ++i) {
      Int q = a(i, c) / a(r, c);
      if (a(i, c) - q * a(r, c) < 0) --q;
      if (q != 0)
        for (std::size_t j = c; j < n; ++j) a(i, j) = checked_sub(a(i, j), checked_mul(q, a(r, j)));
    }
    ++r;
  }
  IntMatrix out(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(i, j);
  return out;
}

}  // namespace slicekit
