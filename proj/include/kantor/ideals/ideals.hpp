#pragma once

// Annihilators, one-sided ideal predicates and principal closures.
// A subspace S is a left ideal when A*S is inside S, a right ideal when S*A is.

#include "kantor/algebra/algebra.hpp"

#include <cstddef>
#include <vector>

namespace kantor {

/// {x : x*y = 0 for all y}.
template <class T>
Subspace<T> left_annihilator(const AlgebraDef<T>& a, const T& one) {
  const std::size_t n = a.dim();
  // Row (j, k): sum_i x_i c[i][j][k] = 0.
  Matrix<T> m(n * n, n);
  for (const auto& e : a.nonzeros()) m(e.j * n + e.k, e.i) += e.c;
  return kernel(m, one);
}

/// {x : y*x = 0 for all y}.
template <class T>
Subspace<T> right_annihilator(const AlgebraDef<T>& a, const T& one) {
  const std::size_t n = a.dim();
  Matrix<T> m(n * n, n);
  for (const auto& e : a.nonzeros()) m(e.i * n + e.k, e.j) += e.c;
  return kernel(m, one);
}

/// Multiplication operators by basis elements, precomputed for repeated
/// ideal tests: left[i] = L_{basis_i}, right[i] = R_{basis_i}.
template <class T>
class MultiplicationOperators {
 public:
  MultiplicationOperators(const AlgebraDef<T>& a, const T& one) : dim_(a.dim()) {
    for (std::size_t i = 0; i < dim_; ++i) {
      const auto b = unit_vector(dim_, i, one);
      left_.push_back(left_operator(a, b));
      right_.push_back(right_operator(a, b));
    }
  }

  std::size_t dim() const { return dim_; }
  const std::vector<Matrix<T>>& left() const { return left_; }
  const std::vector<Matrix<T>>& right() const { return right_; }

  /// basis_i * S inside S for all i.
  bool is_left_ideal(const Subspace<T>& s) const { return stable_under(left_, s); }
  /// S * basis_i inside S for all i.
  bool is_right_ideal(const Subspace<T>& s) const { return stable_under(right_, s); }

  Subspace<T> left_closure(const Vec<T>& x) const { return closure(left_, x); }
  Subspace<T> right_closure(const Vec<T>& x) const { return closure(right_, x); }

 private:
  bool stable_under(const std::vector<Matrix<T>>& ops, const Subspace<T>& s) const {
    s.check_ambient(dim_);
    for (std::size_t r = 0; r < s.dim(); ++r) {
      const auto row = s.basis().row(r);
      for (const auto& op : ops)
        if (!s.contains(mat_vec(op, row))) return false;
    }
    return true;
  }

  Subspace<T> closure(const std::vector<Matrix<T>>& ops, const Vec<T>& x) const {
    Subspace<T> s = Subspace<T>::span(dim_, std::vector<Vec<T>>{x});
    // Only vectors added in the previous round need to be multiplied again.
    std::vector<Vec<T>> frontier = s.basis_vectors();
    while (!frontier.empty()) {
      std::vector<Vec<T>> fresh;
      for (const auto& v : frontier)
        for (const auto& op : ops) {
          auto w = s.reduce(mat_vec(op, v));
          if (is_zero_vector(w)) continue;
          Matrix<T> grown = s.basis();
          grown.append_row(w);
          s = Subspace<T>::span(dim_, grown);
          fresh.push_back(std::move(w));
        }
      frontier = std::move(fresh);
    }
    return s;
  }

  std::size_t dim_;
  std::vector<Matrix<T>> left_;
  std::vector<Matrix<T>> right_;
};

template <class T>
bool is_left_ideal(const AlgebraDef<T>& a, const Subspace<T>& s, const T& one) {
  return MultiplicationOperators<T>(a, one).is_left_ideal(s);
}

template <class T>
bool is_right_ideal(const AlgebraDef<T>& a, const Subspace<T>& s, const T& one) {
  return MultiplicationOperators<T>(a, one).is_right_ideal(s);
}

/// Smallest left ideal containing x.
template <class T>
Subspace<T> principal_left_ideal(const AlgebraDef<T>& a, const Vec<T>& x, const T& one) {
  return MultiplicationOperators<T>(a, one).left_closure(x);
}

/// Smallest right ideal containing x.
template <class T>
Subspace<T> principal_right_ideal(const AlgebraDef<T>& a, const Vec<T>& x, const T& one) {
  return MultiplicationOperators<T>(a, one).right_closure(x);
}

}  // namespace kantor
