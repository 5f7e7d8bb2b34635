#pragma once

// Bilinear maps on V_n (the elements of W(n)), the Kantor bracket and the
// Kantor product A*B = [L_e^A, B].

#include "kantor/algebra/algebra.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kantor {

/// B(v_i, v_j) = sum_k b[i][j][k] v_k. The flattened tensor (index
/// (i*n + j)*n + k) is the coordinate vector in the alpha^k_ij basis.
template <class T>
class BilMap {
 public:
  BilMap() = default;
  explicit BilMap(std::size_t n) : n_(n), b_(n * n * n) {}
  BilMap(std::size_t n, std::vector<T> flat) : n_(n), b_(std::move(flat)) {
    if (b_.size() != n_ * n_ * n_) throw std::invalid_argument("BilMap: tensor size != n^3");
  }

  /// alpha^k_ij (0-based indices): alpha(v_t, v_l) = delta_it delta_jl v_k.
  static BilMap alpha(std::size_t n, std::size_t i, std::size_t j, std::size_t k, const T& one) {
    BilMap m(n);
    m(i, j, k) = one;
    return m;
  }

  std::size_t n() const { return n_; }
  T& operator()(std::size_t i, std::size_t j, std::size_t k) { return b_[(i * n_ + j) * n_ + k]; }
  const T& operator()(std::size_t i, std::size_t j, std::size_t k) const { return b_[(i * n_ + j) * n_ + k]; }
  const std::vector<T>& flat() const { return b_; }

  /// B(x, y) for arbitrary vectors.
  Vec<T> operator()(std::span<const T> x, std::span<const T> y) const {
    if (x.size() != n_ || y.size() != n_) throw std::invalid_argument("BilMap: argument dimension mismatch");
    Vec<T> out(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (is_zero(x[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (is_zero(y[j])) continue;
        const T xy = x[i] * y[j];
        for (std::size_t k = 0; k < n_; ++k) {
          const T& c = (*this)(i, j, k);
          if (!is_zero(c)) out[k] += xy * c;
        }
      }
    }
    return out;
  }
  Vec<T> operator()(const Vec<T>& x, const Vec<T>& y) const {
    return (*this)(std::span<const T>(x), std::span<const T>(y));
  }

  /// Column j of the result is B(e, v_j).
  Matrix<T> left_multiplication(std::span<const T> e) const {
    if (e.size() != n_) throw std::invalid_argument("BilMap::left_multiplication: dimension mismatch");
    Matrix<T> m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
      if (is_zero(e[i])) continue;
      for (std::size_t j = 0; j < n_; ++j)
        for (std::size_t k = 0; k < n_; ++k) m(k, j) += e[i] * (*this)(i, j, k);
    }
    return m;
  }

  BilMap& operator+=(const BilMap& o) {
    check(o);
    for (std::size_t t = 0; t < b_.size(); ++t) b_[t] += o.b_[t];
    return *this;
  }
  BilMap& operator-=(const BilMap& o) {
    check(o);
    for (std::size_t t = 0; t < b_.size(); ++t) b_[t] -= o.b_[t];
    return *this;
  }
  friend BilMap operator+(BilMap a, const BilMap& b) { return a += b; }
  friend BilMap operator-(BilMap a, const BilMap& b) { return a -= b; }
  friend BilMap operator*(BilMap a, const T& s) {
    for (auto& x : a.b_) x *= s;
    return a;
  }
  friend bool operator==(const BilMap&, const BilMap&) = default;

  bool is_zero_map() const { return is_zero_vector(b_); }

 private:
  void check(const BilMap& o) const {
    if (o.n_ != n_) throw std::invalid_argument("BilMap: dimension mismatch");
  }

  std::size_t n_ = 0;
  std::vector<T> b_;
};

/// [D, B](x, y) = D(B(x, y)) - B(Dx, y) - B(x, Dy). Column j of D is D(v_j).
template <class T>
BilMap<T> kantor_bracket(const Matrix<T>& d, const BilMap<T>& b) {
  const std::size_t n = b.n();
  if (d.rows() != n || d.cols() != n) throw std::invalid_argument("kantor_bracket: dimension mismatch");
  BilMap<T> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        T acc{};
        for (std::size_t m = 0; m < n; ++m) {
          if (!is_zero(b(i, j, m)) && !is_zero(d(k, m))) acc += d(k, m) * b(i, j, m);
          if (!is_zero(d(m, i)) && !is_zero(b(m, j, k))) acc -= d(m, i) * b(m, j, k);
          if (!is_zero(d(m, j)) && !is_zero(b(i, m, k))) acc -= d(m, j) * b(i, m, k);
        }
        out(i, j, k) = acc;
      }
  return out;
}

/// A*B = [L_e^A, B] in W(V_n, e).
template <class T>
BilMap<T> kantor_product(const BilMap<T>& a, const BilMap<T>& b, std::span<const T> e) {
  return kantor_bracket(a.left_multiplication(e), b);
}

template <class T>
BilMap<T> kantor_product(const BilMap<T>& a, const BilMap<T>& b, const Vec<T>& e) {
  return kantor_product(a, b, std::span<const T>(e));
}

inline std::string alpha_label(std::size_t i, std::size_t j, std::size_t k) {
  return "alpha^" + std::to_string(k + 1) + "_" + std::to_string(i + 1) + std::to_string(j + 1);
}

/// W(n) with fixed vector e, on the alpha^k_ij basis (flattened index order).
template <class Field>
AlgebraDef<typename Field::value_type> kantor_algebra(const Field& fld, std::size_t n,
                                                      const Vec<typename Field::value_type>& e) {
  using T = typename Field::value_type;
  if (e.size() != n) throw std::invalid_argument("kantor_algebra: e has wrong dimension");
  if (is_zero_vector(e)) throw std::invalid_argument("kantor_algebra: e must be nonzero");
  const std::size_t dim = n * n * n;
  std::vector<BilMap<T>> basis;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        basis.push_back(BilMap<T>::alpha(n, i, j, k, fld.one()));
        labels.push_back(alpha_label(i, j, k));
      }
  std::vector<T> tensor(dim * dim * dim);
  for (std::size_t p = 0; p < dim; ++p) {
    const Matrix<T> left = basis[p].left_multiplication(e);
    for (std::size_t q = 0; q < dim; ++q) {
      const auto prod = kantor_bracket(left, basis[q]);
      for (std::size_t r = 0; r < dim; ++r) tensor[(p * dim + q) * dim + r] = prod.flat()[r];
    }
  }
  return AlgebraDef<T>(dim, std::move(tensor), std::move(labels));
}

/// f.B: (x, y) -> f(B(f^-1 x, f^-1 y)), the action of GL(V) on bilinear maps.
template <class T>
BilMap<T> transport(const Matrix<T>& f, const Matrix<T>& f_inv, const BilMap<T>& b) {
  const std::size_t n = b.n();
  BilMap<T> out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto value = mat_vec(f, b(f_inv.column(i), f_inv.column(j)));
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = value[k];
    }
  return out;
}

template <class T>
bool is_commutative(const BilMap<T>& b) {
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = i + 1; j < b.n(); ++j)
      for (std::size_t k = 0; k < b.n(); ++k)
        if (!(b(i, j, k) == b(j, i, k))) return false;
  return true;
}

/// x -> tr(y -> B(x, y)), as a covector.
template <class T>
Vec<T> trace_form(const BilMap<T>& b) {
  Vec<T> out(b.n());
  for (std::size_t i = 0; i < b.n(); ++i)
    for (std::size_t j = 0; j < b.n(); ++j) out[i] += b(i, j, j);
  return out;
}

}  // namespace kantor
