#pragma once

// Dense exact matrices and the linear solvers built on reduced row echelon form.

#include "kantor/exactmath/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace kantor {

template <class T>
using Vec = std::vector<T>;

template <class T>
bool is_zero_vector(std::span<const T> v) {
  for (const T& x : v) {
    if (!is_zero(x)) return false;
  }
  return true;
}

template <class T>
bool is_zero_vector(const Vec<T>& v) {
  return is_zero_vector(std::span<const T>(v));
}

template <class T>
Vec<T> unit_vector(std::size_t n, std::size_t i, const T& one) {
  Vec<T> v(n);
  v.at(i) = one;
  return v;
}

template <class T>
Vec<T>& add_scaled(Vec<T>& acc, std::span<const T> v, const T& s) {
  if (acc.size() != v.size()) throw std::invalid_argument("add_scaled: length mismatch");
  if (is_zero(s)) return acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_zero(v[i])) acc[i] += v[i] * s;
  }
  return acc;
}

template <class T>
Vec<T> operator+(Vec<T> a, const Vec<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector sum: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
Vec<T> operator-(Vec<T> a, const Vec<T>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vector difference: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
Vec<T> scaled(Vec<T> a, const T& s) {
  for (T& x : a) x *= s;
  return a;
}

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: entry count != rows*cols");
  }

  static Matrix identity(std::size_t n, const T& one) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
  }

  /// Columns given as vectors: column j of the result is cols[j].
  static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (cols[c].size() != rows) throw std::invalid_argument("Matrix::from_columns: ragged columns");
      for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vec<T> row_vector(std::size_t r) const { return Vec<T>(row(r).begin(), row(r).end()); }
  Vec<T> column(std::size_t c) const {
    Vec<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  const std::vector<T>& data() const { return data_; }

  void append_row(std::span<const T> v) {
    if (v.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero_matrix() const { return is_zero_vector(std::span<const T>(data_)); }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: dimension mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) += b(r, c);
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) -= b(r, c);
  return a;
}

template <class T>
Matrix<T> scaled(Matrix<T> a, const T& s) {
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) *= s;
  return a;
}

/// Matrix-vector product; the vector entries may live in a larger ring V
/// (e.g. polynomials) as long as V * T is defined.
template <class T, class V>
Vec<V> mat_vec(const Matrix<T>& m, std::span<const V> v) {
  if (m.cols() != v.size()) throw std::invalid_argument("mat_vec: dimension mismatch");
  Vec<V> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (is_zero(m(r, c)) || is_zero(v[c])) continue;
      out[r] += v[c] * m(r, c);
    }
  return out;
}

template <class T, class V>
Vec<V> mat_vec(const Matrix<T>& m, const Vec<V>& v) {
  return mat_vec(m, std::span<const V>(v));
}

/// A multiplicative identity compatible with the entries of m (needed for
/// ModInt, whose modulus lives in the values).
template <class T>
T unit_like(const T& sample) {
  if constexpr (std::is_same_v<T, ModInt>) {
    return ModInt(1, sample.modulus());
  } else {
    (void)sample;
    return T(1);
  }
}

template <class T>
struct RrefResult {
  Matrix<T> form;
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination. Zero rows are kept
/// (at the bottom) so the shape is unchanged.
template <class T>
RrefResult<T> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::size_t sel = lead_row;
    while (sel < m.rows() && is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead_row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(lead_row, k));
    const T inv = unit_like(m(lead_row, c)) / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || is_zero(m(r, c))) continue;
      const T factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!is_zero(m(lead_row, k))) m(r, k) -= factor * m(lead_row, k);
      }
    }
    pivots.push_back(c);
    ++lead_row;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).rank();
}

template <class T>
T find_unit(const Matrix<T>& m) {
  for (const T& x : m.data()) {
    if (!is_zero(x)) return unit_like(x);
  }
  return unit_like(T{});
}

/// Basis of the right null space {x : m x = 0}, one vector per free column.
template <class T>
std::vector<Vec<T>> kernel_basis(const Matrix<T>& m, const T& one) {
  const auto red = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : red.pivots) is_pivot[c] = true;
  std::vector<Vec<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<T> v(m.cols());
    v[free] = one;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.form(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& m, const T& one) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = one;
  }
  auto red = rref(std::move(aug));
  if (red.rank() < n || red.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix<T> inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red.form(r, n + c);
  return inv;
}

template <class T>
bool is_invertible(const Matrix<T>& m) {
  return m.is_square() && rank(m) == m.rows();
}

}  // namespace kantor
