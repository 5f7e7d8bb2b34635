#pragma once

// Automorphism predicate, derivations, ternary derivations and exponentials
// of nilpotent maps. Spaces of linear maps are stored as subspaces of
// n^2-vectors, flattening a matrix row by row: index r * n + c holds M(r, c).

#include "kantor/algebra/algebra.hpp"

#include <stdexcept>
#include <vector>

namespace kantor {

template <class T>
Vec<T> flatten(const Matrix<T>& m) {
  return m.data();
}

template <class T>
Matrix<T> unflatten(std::span<const T> v, std::size_t n) {
  if (v.size() != n * n) throw std::invalid_argument("unflatten: expected n^2 entries");
  Matrix<T> m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = v[r * n + c];
  return m;
}

template <class T>
Matrix<T> unflatten(const Vec<T>& v, std::size_t n) {
  return unflatten(std::span<const T>(v), n);
}

/// g invertible and g(x y) = g(x) g(y) on all basis pairs.
template <class T>
bool is_algebra_automorphism(const AlgebraDef<T>& alg, const Matrix<T>& g) {
  const std::size_t n = alg.dim();
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("is_algebra_automorphism: dimension mismatch");
  if (!is_invertible(g)) return false;
  std::vector<Vec<T>> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(g.column(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (mat_vec(g, basis_product(alg, i, j)) != eval_mul(alg, images[i], images[j])) return false;
    }
  return true;
}

/// D(x y) = D(x) y + x D(y) on all basis pairs.
template <class T>
bool is_derivation(const AlgebraDef<T>& alg, const Matrix<T>& d, const T& one) {
  const std::size_t n = alg.dim();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("is_derivation: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto lhs = mat_vec(d, basis_product(alg, i, j));
      const auto rhs = eval_mul(alg, d.column(i), unit_vector(n, j, one)) + eval_mul(alg, unit_vector(n, i, one), d.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

namespace detail {

// Coefficients of the unknown matrix entries M(r, c) in the k-th coordinate of
//   M(e_i e_j)       -> sum_m c[i][j][m] M(k, m)
//   M(e_i) e_j       -> sum_m M(m, i) c[m][j][k]
//   e_i M(e_j)       -> sum_m M(m, j) c[i][m][k]
// Each adds `sign` times the coefficient at column offset + r * n + c.
template <class T>
void add_image_of_product(Matrix<T>& sys, std::size_t row, std::size_t offset, const AlgebraDef<T>& alg,
                          std::size_t i, std::size_t j, std::size_t k, const T& sign) {
  const std::size_t n = alg.dim();
  for (std::size_t m = 0; m < n; ++m) {
    const T& c = alg.c(i, j, m);
    if (!is_zero(c)) sys(row, offset + k * n + m) += sign * c;
  }
}

template <class T>
void add_image_times_basis(Matrix<T>& sys, std::size_t row, std::size_t offset, const AlgebraDef<T>& alg,
                           std::size_t i, std::size_t j, std::size_t k, const T& sign) {
  const std::size_t n = alg.dim();
  for (std::size_t m = 0; m < n; ++m) {
    const T& c = alg.c(m, j, k);
    if (!is_zero(c)) sys(row, offset + m * n + i) += sign * c;
  }
}

template <class T>
void add_basis_times_image(Matrix<T>& sys, std::size_t row, std::size_t offset, const AlgebraDef<T>& alg,
                           std::size_t i, std::size_t j, std::size_t k, const T& sign) {
  const std::size_t n = alg.dim();
  for (std::size_t m = 0; m < n; ++m) {
    const T& c = alg.c(i, m, k);
    if (!is_zero(c)) sys(row, offset + m * n + j) += sign * c;
  }
}

}  // namespace detail

/// All D with D(xy) = D(x)y + xD(y), as flattened n x n matrices.
template <class T>
Subspace<T> derivation_space(const AlgebraDef<T>& alg, const T& one) {
  const std::size_t n = alg.dim();
  Matrix<T> sys(n * n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = (i * n + j) * n + k;
        detail::add_image_of_product(sys, row, 0, alg, i, j, k, one);
        detail::add_image_times_basis(sys, row, 0, alg, i, j, k, -one);
        detail::add_basis_times_image(sys, row, 0, alg, i, j, k, -one);
      }
  return kernel(sys, one);
}

/// (D, F, G) with D(xy) = F(x)y + xG(y).
template <class T>
struct TernaryTriple {
  Matrix<T> d;
  Matrix<T> f;
  Matrix<T> g;

  TernaryTriple(Matrix<T> d_, Matrix<T> f_, Matrix<T> g_) : d(std::move(d_)), f(std::move(f_)), g(std::move(g_)) {
    if (d.rows() != f.rows() || d.rows() != g.rows() || !d.is_square() || !f.is_square() || !g.is_square()) {
      throw std::invalid_argument("TernaryTriple: maps must be square of equal size");
    }
  }

  /// d, f, g flattened and concatenated.
  Vec<T> stacked() const {
    Vec<T> out = flatten(d);
    for (const auto& m : {f, g}) out.insert(out.end(), m.data().begin(), m.data().end());
    return out;
  }

  static TernaryTriple unstack(const Vec<T>& v, std::size_t n) {
    if (v.size() != 3 * n * n) throw std::invalid_argument("TernaryTriple: expected 3 n^2 entries");
    auto part = [&](std::size_t k) { return unflatten(std::span<const T>(v).subspan(k * n * n, n * n), n); };
    return {part(0), part(1), part(2)};
  }
};

template <class T>
bool is_ternary_derivation(const AlgebraDef<T>& alg, const TernaryTriple<T>& t, const T& one) {
  const std::size_t n = alg.dim();
  if (t.d.rows() != n) throw std::invalid_argument("is_ternary_derivation: dimension mismatch");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto lhs = mat_vec(t.d, basis_product(alg, i, j));
      const auto rhs = eval_mul(alg, t.f.column(i), unit_vector(n, j, one)) + eval_mul(alg, unit_vector(n, i, one), t.g.column(j));
      if (lhs != rhs) return false;
    }
  return true;
}

/// Stacked (d, f, g) vectors of all ternary derivations: 3 n^2 unknowns.
template <class T>
Subspace<T> ternary_derivation_space(const AlgebraDef<T>& alg, const T& one) {
  const std::size_t n = alg.dim();
  const std::size_t block = n * n;
  Matrix<T> sys(n * n * n, 3 * block);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = (i * n + j) * n + k;
        detail::add_image_of_product(sys, row, 0, alg, i, j, k, one);
        detail::add_image_times_basis(sys, row, block, alg, i, j, k, -one);
        detail::add_basis_times_image(sys, row, 2 * block, alg, i, j, k, -one);
      }
  return kernel(sys, one);
}

/// sum_{k < n} d^k / k! for nilpotent d (d^n = 0 is checked first).
template <class T>
Matrix<T> exp_nilpotent(const Matrix<T>& d, const T& one) {
  if (!d.is_square()) throw std::invalid_argument("exp_nilpotent: matrix must be square");
  const std::size_t n = d.rows();
  std::vector<Matrix<T>> powers{Matrix<T>::identity(n, one)};
  for (std::size_t k = 1; k <= n; ++k) powers.push_back(powers.back() * d);
  if (!powers[n].is_zero_matrix()) throw std::domain_error("exp_nilpotent: map is not nilpotent");
  Matrix<T> sum = powers[0];
  T factorial = one, k_as_scalar = one - one;
  for (std::size_t k = 1; k < n; ++k) {
    if (powers[k].is_zero_matrix()) break;
    k_as_scalar += one;
    factorial *= k_as_scalar;
    if (is_zero(factorial)) throw std::domain_error("exp_nilpotent: k! vanishes in this characteristic");
    sum = sum + scaled(powers[k], one / factorial);
  }
  return sum;
}

}  // namespace kantor
