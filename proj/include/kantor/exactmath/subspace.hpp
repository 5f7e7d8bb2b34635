#pragma once

// Subspaces of a coordinate space, stored by their canonical RREF basis.

#include "kantor/exactmath/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace kantor {

template <class T>
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }

  static Subspace full(std::size_t ambient, const T& one) {
    return span(ambient, Matrix<T>::identity(ambient, one));
  }

  /// Span of the rows of m.
  static Subspace span(std::size_t ambient, const Matrix<T>& m) {
    if (m.rows() > 0 && m.cols() != ambient) throw std::invalid_argument("Subspace::span: ambient mismatch");
    Subspace s(ambient);
    if (m.rows() == 0) return s;
    auto red = rref(m);
    s.pivots_ = std::move(red.pivots);
    s.basis_ = Matrix<T>(s.pivots_.size(), ambient);
    for (std::size_t r = 0; r < s.pivots_.size(); ++r)
      for (std::size_t c = 0; c < ambient; ++c) s.basis_(r, c) = red.form(r, c);
    return s;
  }

  static Subspace span(std::size_t ambient, const std::vector<Vec<T>>& vectors) {
    Matrix<T> m(0, ambient);
    for (const auto& v : vectors) m.append_row(v);
    return span(ambient, m);
  }

  /// Adopts rows already in reduced row echelon form. The caller guarantees
  /// canonicity (used by the subspace enumerator).
  static Subspace from_rref_unchecked(Matrix<T> rows, std::vector<std::size_t> pivots) {
    Subspace s(rows.cols());
    s.basis_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix<T>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec<T> basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vec<T>> basis_vectors() const {
    std::vector<Vec<T>> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
    return out;
  }

  /// v minus its projection along the pivot rows; zero iff v lies in the span.
  Vec<T> reduce(Vec<T> v) const {
    check_ambient(v.size());
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const T coef = v[pivots_[r]];
      if (kantor::is_zero(coef)) continue;
      const auto row = basis_.row(r);
      for (std::size_t c = pivots_[r]; c < ambient_; ++c) {
        if (!kantor::is_zero(row[c])) v[c] -= coef * row[c];
      }
    }
    return v;
  }

  bool contains(std::span<const T> v) const {
    return is_zero_vector(reduce(Vec<T>(v.begin(), v.end())));
  }
  bool contains(const Vec<T>& v) const { return contains(std::span<const T>(v)); }

  /// Coordinates of v (assumed to lie in the subspace) in the stored basis.
  Vec<T> coordinates(std::span<const T> v) const {
    check_ambient(v.size());
    Vec<T> out(dim());
    for (std::size_t r = 0; r < dim(); ++r) out[r] = v[pivots_[r]];
    return out;
  }

  bool is_subspace_of(const Subspace& other) const {
    for (std::size_t r = 0; r < dim(); ++r) {
      if (!other.contains(basis_.row(r))) return false;
    }
    return true;
  }

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.basis_ == b.basis_;
  }

  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.pivots_ != b.pivots_) {
      if (a.pivots_.size() != b.pivots_.size()) return a.pivots_.size() < b.pivots_.size();
      return a.pivots_ < b.pivots_;
    }
    return std::lexicographical_compare(a.basis_.data().begin(), a.basis_.data().end(),
                                        b.basis_.data().begin(), b.basis_.data().end());
  }

  void check_ambient(std::size_t n) const {
    if (n != ambient_) {
      throw std::invalid_argument("subspace ambient dimension " + std::to_string(ambient_) +
                                  " does not match " + std::to_string(n));
    }
  }

 private:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  std::size_t ambient_ = 0;
  Matrix<T> basis_;
  std::vector<std::size_t> pivots_;
};

template <class T>
Subspace<T> subspace_span(std::size_t ambient, const std::vector<Vec<T>>& vectors) {
  return Subspace<T>::span(ambient, vectors);
}

template <class T>
Subspace<T> subspace_sum(const Subspace<T>& a, const Subspace<T>& b) {
  a.check_ambient(b.ambient_dim());
  Matrix<T> m = a.basis();
  for (std::size_t r = 0; r < b.dim(); ++r) m.append_row(b.basis().row(r));
  return Subspace<T>::span(a.ambient_dim(), m);
}

/// {x : <x, s> = 0 for all s}, with the standard pairing of coordinates.
template <class T>
Subspace<T> annihilator(const Subspace<T>& s, const T& one) {
  if (s.dim() == 0) return Subspace<T>::full(s.ambient_dim(), one);
  return Subspace<T>::span(s.ambient_dim(), kernel_basis(s.basis(), one));
}

template <class T>
Subspace<T> subspace_intersect(const Subspace<T>& a, const Subspace<T>& b, const T& one) {
  a.check_ambient(b.ambient_dim());
  // (A ∩ B)° = A° + B°, and the pairing is nondegenerate in every field.
  return annihilator(subspace_sum(annihilator(a, one), annihilator(b, one)), one);
}

template <class T>
bool subspace_contains(const Subspace<T>& s, const Vec<T>& v) {
  return s.contains(v);
}

template <class T>
bool is_direct_sum(const Subspace<T>& a, const Subspace<T>& b) {
  return a.dim() + b.dim() == a.ambient_dim() && subspace_sum(a, b).is_full();
}

template <class T>
struct LinearSolution {
  Vec<T> particular;
  Subspace<T> kernel;
};

/// Solves a x = b. Returns the particular solution with free variables set
/// to zero together with the full kernel, or nothing if inconsistent.
template <class T>
std::optional<LinearSolution<T>> solve_linear(const Matrix<T>& a, std::span<const T> b, const T& one) {
  if (a.rows() != b.size()) {
    throw std::invalid_argument("solve_linear: " + std::to_string(a.rows()) + " rows but rhs of length " +
                                std::to_string(b.size()));
  }
  const std::size_t n = a.cols();
  Matrix<T> aug(a.rows(), n + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n) = b[r];
  }
  auto red = rref(std::move(aug));
  if (!red.pivots.empty() && red.pivots.back() == n) return std::nullopt;
  Vec<T> particular(n);
  for (std::size_t r = 0; r < red.pivots.size(); ++r) particular[red.pivots[r]] = red.form(r, n);
  return LinearSolution<T>{std::move(particular), Subspace<T>::span(n, kernel_basis(a, one))};
}

template <class T>
std::optional<LinearSolution<T>> solve_linear(const Matrix<T>& a, const Vec<T>& b, const T& one) {
  return solve_linear(a, std::span<const T>(b), one);
}

template <class T>
Subspace<T> kernel(const Matrix<T>& a, const T& one) {
  return Subspace<T>::span(a.cols(), kernel_basis(a, one));
}

}  // namespace kantor
