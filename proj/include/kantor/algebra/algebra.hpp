#pragma once

// Finite-dimensional algebras given by structure constants:
// basis_i * basis_j = sum_k c[i][j][k] basis_k.

#include "kantor/exactmath/subspace.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kantor {

template <class T>
class AlgebraDef {
 public:
  struct Entry {
    std::size_t i, j, k;
    T c;
  };

  AlgebraDef() = default;

  AlgebraDef(std::size_t dim, std::vector<T> tensor, std::vector<std::string> labels)
      : dim_(dim), tensor_(std::move(tensor)), labels_(std::move(labels)) {
    if (tensor_.size() != dim_ * dim_ * dim_) {
      throw std::invalid_argument("AlgebraDef: tensor has " + std::to_string(tensor_.size()) +
                                  " entries, expected dim^3 = " + std::to_string(dim_ * dim_ * dim_));
    }
    if (labels_.size() != dim_) throw std::invalid_argument("AlgebraDef: label count != dim");
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        for (std::size_t k = 0; k < dim_; ++k) {
          const T& v = c(i, j, k);
          if (!is_zero(v)) nonzeros_.push_back({i, j, k, v});
        }
  }

  /// The algebra with zero multiplication on `dim` generators x1..xn.
  static AlgebraDef zero_algebra(std::size_t dim) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("x" + std::to_string(i + 1));
    return AlgebraDef(dim, std::vector<T>(dim * dim * dim), std::move(labels));
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<T>& tensor() const { return tensor_; }
  const std::vector<Entry>& nonzeros() const { return nonzeros_; }

  const T& c(std::size_t i, std::size_t j, std::size_t k) const { return tensor_[(i * dim_ + j) * dim_ + k]; }

  friend bool operator==(const AlgebraDef& a, const AlgebraDef& b) {
    return a.dim_ == b.dim_ && a.tensor_ == b.tensor_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<T> tensor_;
  std::vector<std::string> labels_;
  std::vector<Entry> nonzeros_;
};

/// x * y in the algebra. Coordinates may be drawn from a ring V over the
/// scalars (polynomials for parametric identities).
template <class T, class V>
Vec<V> eval_mul(const AlgebraDef<T>& a, std::span<const V> x, std::span<const V> y) {
  if (x.size() != a.dim() || y.size() != a.dim()) {
    throw std::invalid_argument("eval_mul: vectors of length " + std::to_string(x.size()) + "/" +
                                std::to_string(y.size()) + " in an algebra of dimension " + std::to_string(a.dim()));
  }
  Vec<V> out(a.dim());
  for (const auto& e : a.nonzeros()) {
    if (is_zero(x[e.i]) || is_zero(y[e.j])) continue;
    out[e.k] += x[e.i] * y[e.j] * e.c;
  }
  return out;
}

template <class T, class V>
Vec<V> eval_mul(const AlgebraDef<T>& a, const Vec<V>& x, const Vec<V>& y) {
  return eval_mul(a, std::span<const V>(x), std::span<const V>(y));
}

/// Product of two basis elements.
template <class T>
Vec<T> basis_product(const AlgebraDef<T>& a, std::size_t i, std::size_t j) {
  Vec<T> out(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) out[k] = a.c(i, j, k);
  return out;
}

/// L_x: column j is x * basis_j.
template <class T>
Matrix<T> left_operator(const AlgebraDef<T>& a, std::span<const T> x) {
  if (x.size() != a.dim()) throw std::invalid_argument("left_operator: dimension mismatch");
  Matrix<T> m(a.dim(), a.dim());
  for (const auto& e : a.nonzeros()) {
    if (!is_zero(x[e.i])) m(e.k, e.j) += x[e.i] * e.c;
  }
  return m;
}

template <class T>
Matrix<T> left_operator(const AlgebraDef<T>& a, const Vec<T>& x) {
  return left_operator(a, std::span<const T>(x));
}

/// R_x: column i is basis_i * x.
template <class T>
Matrix<T> right_operator(const AlgebraDef<T>& a, std::span<const T> x) {
  if (x.size() != a.dim()) throw std::invalid_argument("right_operator: dimension mismatch");
  Matrix<T> m(a.dim(), a.dim());
  for (const auto& e : a.nonzeros()) {
    if (!is_zero(x[e.j])) m(e.k, e.i) += x[e.j] * e.c;
  }
  return m;
}

template <class T>
Matrix<T> right_operator(const AlgebraDef<T>& a, const Vec<T>& x) {
  return right_operator(a, std::span<const T>(x));
}

/// The algebra in a new basis whose vectors are the columns of `change`.
template <class T>
AlgebraDef<T> change_basis(const AlgebraDef<T>& a, const Matrix<T>& change, std::vector<std::string> labels,
                           const T& one) {
  const std::size_t n = a.dim();
  if (change.rows() != n || change.cols() != n) throw std::invalid_argument("change_basis: shape mismatch");
  const auto inv = inverse(change, one);
  if (!inv) throw std::invalid_argument("change_basis: basis matrix is singular");
  std::vector<T> tensor(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto prod = mat_vec(*inv, eval_mul(a, change.column(i), change.column(j)));
      for (std::size_t k = 0; k < n; ++k) tensor[(i * n + j) * n + k] = prod[k];
    }
  return AlgebraDef<T>(n, std::move(tensor), std::move(labels));
}

/// Smallest subspace containing `s` closed under the product.
template <class T>
Subspace<T> generated_subalgebra(const AlgebraDef<T>& a, const std::vector<Vec<T>>& generators) {
  Subspace<T> s = Subspace<T>::span(a.dim(), generators);
  for (;;) {
    std::vector<Vec<T>> grow = s.basis_vectors();
    const auto basis = s.basis_vectors();
    for (const auto& x : basis)
      for (const auto& y : basis) grow.push_back(eval_mul(a, x, y));
    Subspace<T> next = Subspace<T>::span(a.dim(), grow);
    if (next.dim() == s.dim()) return s;
    s = std::move(next);
  }
}

template <class T>
bool is_closed_subspace(const AlgebraDef<T>& a, const Subspace<T>& s) {
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t q = 0; q < s.dim(); ++q) {
      if (!s.contains(eval_mul(a, s.basis().row(r), s.basis().row(q)))) return false;
    }
  return true;
}

/// The subalgebra on the canonical basis of s, or nothing if s is not
/// multiplicatively closed.
template <class T>
std::optional<AlgebraDef<T>> restrict_subalgebra(const AlgebraDef<T>& a, const Subspace<T>& s,
                                                 std::vector<std::string> labels = {}) {
  s.check_ambient(a.dim());
  const std::size_t m = s.dim();
  std::vector<T> tensor(m * m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const auto prod = eval_mul(a, s.basis().row(i), s.basis().row(j));
      if (!s.contains(prod)) return std::nullopt;
      const auto coords = s.coordinates(prod);
      for (std::size_t k = 0; k < m; ++k) tensor[(i * m + j) * m + k] = coords[k];
    }
  if (labels.empty()) {
    for (std::size_t i = 0; i < m; ++i) {
      const auto row = s.basis().row(i);
      std::size_t nonzero = 0;
      for (const T& x : row) nonzero += is_zero(x) ? 0 : 1;
      const bool unit = nonzero == 1 && row[s.pivots()[i]] == unit_like(row[s.pivots()[i]]);
      labels.push_back(unit ? a.labels()[s.pivots()[i]] : "b" + std::to_string(i + 1));
    }
  }
  return AlgebraDef<T>(m, std::move(tensor), std::move(labels));
}

}  // namespace kantor
