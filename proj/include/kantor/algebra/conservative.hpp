#pragma once

// Conservativity: an algebra (W, P) is conservative when some multiplication
// F satisfies, for all a, b, x, y,
//   b(a(xy) - (ax)y - x(ay)) - a((bx)y) + (a(bx))y + (bx)(ay)
//     - a(x(by)) + (ax)(by) + x(a(by))  =  -F(a,b)(xy) + (F(a,b)x)y + x(F(a,b)y).
// For fixed P this is linear in F, and the unknowns F(a,b) for different
// basis pairs (a, b) never interact, so each pair is solved on its own.

#include "kantor/algebra/algebra.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace kantor {

template <class T>
struct ConservativityWitness {
  /// F as a structure tensor: F(basis_a, basis_b) = sum_k f[(a*n + b)*n + k] basis_k.
  AlgebraDef<T> f;
  /// Solution space of the homogeneous system for each pair (a, b), index a*n + b.
  std::vector<Subspace<T>> pair_kernels;
};

namespace detail {

template <class T>
Vec<T> conservativity_lhs(const AlgebraDef<T>& alg, const Vec<T>& a, const Vec<T>& b, const Vec<T>& x,
                          const Vec<T>& y) {
  auto mul = [&](const Vec<T>& u, const Vec<T>& v) { return eval_mul(alg, u, v); };
  const auto xy = mul(x, y);
  const auto ax = mul(a, x);
  const auto ay = mul(a, y);
  const auto bx = mul(b, x);
  const auto by = mul(b, y);
  Vec<T> out = mul(b, mul(a, xy) - mul(ax, y) - mul(x, ay));
  out = out - mul(a, mul(bx, y)) + mul(mul(a, bx), y) + mul(bx, ay);
  out = out - mul(a, mul(x, by)) + mul(ax, by) + mul(x, mul(a, by));
  return out;
}

template <class T>
Vec<T> conservativity_rhs(const AlgebraDef<T>& alg, const Vec<T>& f, const Vec<T>& x, const Vec<T>& y) {
  auto mul = [&](const Vec<T>& u, const Vec<T>& v) { return eval_mul(alg, u, v); };
  return mul(mul(f, x), y) + mul(x, mul(f, y)) - mul(f, mul(x, y));
}

}  // namespace detail

/// Solves for an associated multiplication F. Empty result: not conservative.
template <class T>
std::optional<ConservativityWitness<T>> conservativity_witness(const AlgebraDef<T>& alg, const T& one) {
  const std::size_t n = alg.dim();
  std::vector<Vec<T>> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i, one));

  // Column k of the coefficient matrix: RHS evaluated at F = basis_k, per (x, y).
  Matrix<T> coeff(n * n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const auto r = detail::conservativity_rhs(alg, basis[k], basis[x], basis[y]);
        for (std::size_t c = 0; c < n; ++c) coeff((x * n + y) * n + c, k) = r[c];
      }

  std::vector<T> f_tensor(n * n * n);
  std::vector<Subspace<T>> kernels;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Vec<T> rhs(n * n * n);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          const auto l = detail::conservativity_lhs(alg, basis[a], basis[b], basis[x], basis[y]);
          for (std::size_t c = 0; c < n; ++c) rhs[(x * n + y) * n + c] = l[c];
        }
      auto sol = solve_linear(coeff, rhs, one);
      if (!sol) return std::nullopt;
      for (std::size_t k = 0; k < n; ++k) f_tensor[(a * n + b) * n + k] = sol->particular[k];
      kernels.push_back(std::move(sol->kernel));
    }
  return ConservativityWitness<T>{AlgebraDef<T>(n, std::move(f_tensor), alg.labels()), std::move(kernels)};
}

/// Number of basis quadruples (a, b, x, y) on which the identity fails for
/// the given F (0 means F is a witness).
template <class T>
std::size_t conservativity_residual(const AlgebraDef<T>& alg, const AlgebraDef<T>& f, const T& one) {
  const std::size_t n = alg.dim();
  std::vector<Vec<T>> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vector(n, i, one));
  std::size_t failures = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const auto fab = eval_mul(f, basis[a], basis[b]);
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
          const auto diff = detail::conservativity_lhs(alg, basis[a], basis[b], basis[x], basis[y]) -
                            detail::conservativity_rhs(alg, fab, basis[x], basis[y]);
          if (!is_zero_vector(diff)) ++failures;
        }
    }
  return failures;
}

}  // namespace kantor
