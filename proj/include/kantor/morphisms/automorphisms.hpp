#pragma once

// Aut(A) over GF(p) for S_2, W_2 and W(2).
//
// The search fixes an automorphism on a subspace K that every automorphism
// maps onto itself. Once f|K is known, every relation f(u y) = f(u) f(y) and
// f(y u) = f(y) f(u) with u in K is linear in the unknown images of a
// complement basis. The solution set of that linear system contains every
// automorphism extending f|K; it is enumerated point by point and filtered
// by the full multiplicative check.
//
//   S_2:        K = Ann_l(S_2) = <e4>, f|K ranges over GL(K).
//   W_2, W(2):  K = S_2 = <e1..e4>, f|K ranges over Aut(S_2).
//
// K = S_2 is stable because it is the only 4-dimensional left ideal of W_2.
// In W(2) the 4-dimensional left ideals are <e1..e4> and <e5..e8>; the
// latter is the sum of all 2-dimensional left ideals, so it is stable, and
// hence so is the former. Both facts are rechecked before the search runs
// (for W(2) against the classified list, whose completeness over GF(p) is
// what the principal-ideal census tests).

#include "kantor/ideals/census.hpp"
#include "kantor/morphisms/derivations.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kantor {

inline constexpr std::uint64_t kMaxAutomorphismCandidates = 2'000'000;

namespace detail {

inline std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap, const std::string& what) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > cap / base) {
      throw std::invalid_argument(what + ": search space " + std::to_string(base) + "^" + std::to_string(exp) +
                                  " exceeds the limit of " + std::to_string(cap) + " candidates");
    }
    out *= base;
  }
  return out;
}

/// Invertible k x k matrices over GF(p), as lists of column images.
inline std::vector<Matrix<ModInt>> general_linear_group(const PrimeField& fld, std::size_t k) {
  const std::uint64_t count = checked_power(fld.p(), k * k, kMaxAutomorphismCandidates, "GL enumeration");
  std::vector<Matrix<ModInt>> out;
  for (std::uint64_t code = 0; code < count; ++code) {
    Matrix<ModInt> m(k, k);
    std::uint64_t rest = code;
    for (std::size_t idx = 0; idx < k * k; ++idx) {
      m(idx / k, idx % k) = fld.element(static_cast<std::uint32_t>(rest % fld.p()));
      rest /= fld.p();
    }
    if (is_invertible(m)) out.push_back(std::move(m));
  }
  return out;
}

/// All automorphisms f with f(k_i) = base_images[i] for the basis k_i of K.
inline std::vector<Matrix<ModInt>> extend_automorphisms(const PrimeField& fld, const AlgebraDef<ModInt>& alg,
                                                        const Subspace<ModInt>& k_space,
                                                        const std::vector<Vec<ModInt>>& base_images) {
  const std::size_t n = alg.dim();
  const std::size_t k = k_space.dim();
  const ModInt one = fld.one();

  // Adapted basis: K's basis followed by the unit vectors off K's pivots.
  std::vector<Vec<ModInt>> adapted = k_space.basis_vectors();
  std::vector<std::size_t> complement;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::find(k_space.pivots().begin(), k_space.pivots().end(), i) == k_space.pivots().end()) {
      complement.push_back(i);
      adapted.push_back(unit_vector(n, i, one));
    }
  }
  const auto adapted_inv = *inverse(Matrix<ModInt>::from_columns(adapted, n), one);
  const std::size_t m = complement.size();
  const std::size_t unknowns = n * m;

  // f(v) as an affine expression: coefficient matrix over the unknowns and a constant.
  struct Affine {
    Matrix<ModInt> coef;
    Vec<ModInt> constant;
  };
  auto image_of = [&](const Vec<ModInt>& v) {
    const auto c = mat_vec(adapted_inv, v);
    Affine out{Matrix<ModInt>(n, unknowns), Vec<ModInt>(n, fld.zero())};
    for (std::size_t i = 0; i < k; ++i)
      if (!is_zero(c[i])) add_scaled(out.constant, std::span<const ModInt>(base_images[i]), c[i]);
    for (std::size_t j = 0; j < m; ++j)
      if (!is_zero(c[k + j]))
        for (std::size_t r = 0; r < n; ++r) out.coef(r, j * n + r) += c[k + j];
    return out;
  };
  // x * Y_j (left = true) or Y_j * x with x known: op(r, b) multiplies unknown (j, b).
  auto product_with_unknown = [&](const Vec<ModInt>& known, std::size_t j, bool known_on_left) {
    const auto op = known_on_left ? left_operator(alg, known) : right_operator(alg, known);
    Affine out{Matrix<ModInt>(n, unknowns), Vec<ModInt>(n, fld.zero())};
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t b = 0; b < n; ++b) out.coef(r, j * n + b) = op(r, b);
    return out;
  };

  Matrix<ModInt> sys(0, unknowns);
  Vec<ModInt> rhs;
  // Appends lhs - rhs_expr = 0.
  auto require_equal = [&](const Affine& lhs, const Affine& other) {
    for (std::size_t r = 0; r < n; ++r) {
      Vec<ModInt> row(unknowns, fld.zero());
      for (std::size_t u = 0; u < unknowns; ++u) row[u] = lhs.coef(r, u) - other.coef(r, u);
      sys.append_row(row);
      rhs.push_back(other.constant[r] - lhs.constant[r]);
    }
  };

  const auto k_basis = k_space.basis_vectors();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t i2 = 0; i2 < k; ++i2) {
      require_equal(image_of(eval_mul(alg, k_basis[i], k_basis[i2])),
                    Affine{Matrix<ModInt>(n, unknowns), eval_mul(alg, base_images[i], base_images[i2])});
    }
    for (std::size_t j = 0; j < m; ++j) {
      const auto y = unit_vector(n, complement[j], one);
      require_equal(image_of(eval_mul(alg, k_basis[i], y)), product_with_unknown(base_images[i], j, true));
      require_equal(image_of(eval_mul(alg, y, k_basis[i])), product_with_unknown(base_images[i], j, false));
    }
  }

  const auto solution = solve_linear(sys, rhs, one);
  if (!solution) return {};
  const auto directions = solution->kernel.basis_vectors();
  const std::uint64_t count =
      checked_power(fld.p(), directions.size(), kMaxAutomorphismCandidates, "automorphism extension");

  std::vector<Matrix<ModInt>> found;
  for (std::uint64_t code = 0; code < count; ++code) {
    Vec<ModInt> x = solution->particular;
    std::uint64_t rest = code;
    for (const auto& d : directions) {
      const ModInt coeff = fld.element(static_cast<std::uint32_t>(rest % fld.p()));
      rest /= fld.p();
      if (!is_zero(coeff)) add_scaled(x, std::span<const ModInt>(d), coeff);
    }
    std::vector<Vec<ModInt>> images = base_images;
    for (std::size_t j = 0; j < m; ++j) images.emplace_back(x.begin() + static_cast<std::ptrdiff_t>(j * n),
                                                            x.begin() + static_cast<std::ptrdiff_t>((j + 1) * n));
    const auto f = Matrix<ModInt>::from_columns(images, n) * adapted_inv;
    if (is_algebra_automorphism(alg, f)) found.push_back(f);
  }
  return found;
}

inline bool matrix_less(const Matrix<ModInt>& a, const Matrix<ModInt>& b) {
  return std::lexicographical_compare(a.data().begin(), a.data().end(), b.data().begin(), b.data().end(),
                                      [](ModInt x, ModInt y) { return x.value() < y.value(); });
}

inline Matrix<ModInt> embed_block(const Matrix<ModInt>& block, std::size_t n, const ModInt& one) {
  Matrix<ModInt> out = Matrix<ModInt>::identity(n, one);
  for (std::size_t r = 0; r < block.rows(); ++r)
    for (std::size_t c = 0; c < block.cols(); ++c) out(r, c) = block(r, c);
  return out;
}

inline std::vector<Matrix<ModInt>> s2_automorphisms(const PrimeField& fld) {
  const auto alg = algebra_by_tag(fld, AlgebraTag::s2);
  const auto ann = left_annihilator(alg, fld.one());
  const auto ann_basis = ann.basis_vectors();
  std::vector<Matrix<ModInt>> out;
  for (const auto& g : general_linear_group(fld, ann.dim())) {
    std::vector<Vec<ModInt>> images;
    for (std::size_t i = 0; i < ann.dim(); ++i) {
      Vec<ModInt> v(alg.dim(), fld.zero());
      for (std::size_t r = 0; r < ann.dim(); ++r) add_scaled(v, std::span<const ModInt>(ann_basis[r]), g(r, i));
      images.push_back(std::move(v));
    }
    for (auto& f : extend_automorphisms(fld, alg, ann, images)) out.push_back(std::move(f));
  }
  return out;
}

/// Rechecks that <e1..e4> is mapped onto itself by every automorphism.
inline void check_s2_is_stable(const PrimeField& fld, AlgebraTag tag) {
  const auto alg = algebra_by_tag(fld, tag);
  const auto s2 = e_span(fld, alg.dim(), {1, 2, 3, 4});
  if (tag == AlgebraTag::w2_comm) {
    const MultiplicationOperators<ModInt> ops(alg, fld.one());
    std::size_t four_dim_left_ideals = 0;
    bool s2_seen = false;
    enumerate_subspaces(fld.p(), alg.dim(), std::size_t{4}, [&](const Subspace<ModInt>& s) {
      if (ops.is_left_ideal(s)) {
        ++four_dim_left_ideals;
        s2_seen = s2_seen || s == s2;
      }
    });
    if (four_dim_left_ideals != 1 || !s2_seen) {
      throw std::logic_error("W_2 over " + fld.name() + ": <e1..e4> is not the unique 4-dimensional left ideal");
    }
    return;
  }
  if (tag == AlgebraTag::w2) {
    const auto i2 = e_span(fld, alg.dim(), {5, 6, 7, 8});
    std::vector<Subspace<ModInt>> four_dim;
    auto two_dim_sum = Subspace<ModInt>::zero(alg.dim());
    for (const auto& s : classified_left_ideals(fld, tag)) {
      if (s.dim() == 4) four_dim.push_back(s);
      if (s.dim() == 2) two_dim_sum = subspace_sum(two_dim_sum, s);
    }
    const bool ok = four_dim.size() == 2 && two_dim_sum == i2 &&
                    ((four_dim[0] == s2 && four_dim[1] == i2) || (four_dim[0] == i2 && four_dim[1] == s2));
    if (!ok) throw std::logic_error("W(2) over " + fld.name() + ": cannot show that <e1..e4> is stable");
  }
}

}  // namespace detail

/// The full automorphism group of the algebra over GF(p), sorted by matrix entries.
inline std::vector<Matrix<ModInt>> automorphism_group_gfp(AlgebraTag tag, std::uint32_t p) {
  const PrimeField fld(p);
  std::vector<Matrix<ModInt>> out;
  if (tag == AlgebraTag::s2) {
    out = detail::s2_automorphisms(fld);
  } else {
    detail::check_s2_is_stable(fld, tag);
    const auto alg = algebra_by_tag(fld, tag);
    const auto s2 = e_span(fld, alg.dim(), {1, 2, 3, 4});
    for (const auto& g : detail::s2_automorphisms(fld)) {
      const auto embedded = detail::embed_block(g, alg.dim(), fld.one());
      std::vector<Vec<ModInt>> images;
      for (std::size_t i = 0; i < 4; ++i) images.push_back(embedded.column(i));
      for (auto& f : detail::extend_automorphisms(fld, alg, s2, images)) out.push_back(std::move(f));
    }
  }
  std::sort(out.begin(), out.end(), detail::matrix_less);
  return out;
}

/// Contains the identity and is closed under composition and inverses.
template <class T>
bool is_matrix_group(const std::vector<Matrix<T>>& elems, const T& one) {
  if (elems.empty()) return false;
  const std::size_t n = elems.front().rows();
  auto contains = [&](const Matrix<T>& m) { return std::find(elems.begin(), elems.end(), m) != elems.end(); };
  if (!contains(Matrix<T>::identity(n, one))) return false;
  for (const auto& a : elems) {
    const auto inv = inverse(a, one);
    if (!inv || !contains(*inv)) return false;
    for (const auto& b : elems)
      if (!contains(a * b)) return false;
  }
  return true;
}

}  // namespace kantor
