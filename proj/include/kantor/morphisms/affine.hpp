#pragma once

// GL(V_2, v_1) = { S_b T_a } and its action on W(2), W_2 and S_2.
//   T_a: v_2 -> v_2 + a v_1,   S_b: v_2 -> v_2 / b,   S_b T_a = T_{ab} S_b.
// Maps on V_2 and on the algebras follow the usual convention: column j of
// a matrix is the image of basis vector j.

#include "kantor/algebra/w2.hpp"

#include <stdexcept>
#include <string>

namespace kantor {

/// The element S_b T_a of GL(V_2, v_1): v_1 -> v_1, v_2 -> v_2 / b + a v_1.
template <class T>
struct AffineParam {
  T a;
  T b;

  static AffineParam identity(const T& one) { return {one - one, one}; }

  friend bool operator==(const AffineParam&, const AffineParam&) = default;
};

template <class T>
void check_affine(const AffineParam<T>& g) {
  if (is_zero(g.b)) throw std::invalid_argument("affine parameter b must be nonzero");
}

/// (g1 g2)(v) = g1(g2(v)).
template <class T>
AffineParam<T> compose(const AffineParam<T>& g1, const AffineParam<T>& g2) {
  check_affine(g1);
  check_affine(g2);
  return {g2.a + g1.a / g2.b, g1.b * g2.b};
}

template <class T>
AffineParam<T> inverse(const AffineParam<T>& g) {
  check_affine(g);
  return {-(g.a * g.b), unit_like(g.b) / g.b};
}

template <class T>
std::string to_string(const AffineParam<T>& g) {
  return "(a=" + to_string(g.a) + ", b=" + to_string(g.b) + ")";
}

/// The 2x2 matrix of S_b T_a on V_2.
template <class T>
Matrix<T> v2_matrix(const AffineParam<T>& g) {
  check_affine(g);
  const T one = unit_like(g.b);
  Matrix<T> m(2, 2);
  m(0, 0) = one;
  m(0, 1) = g.a;
  m(1, 1) = one / g.b;
  return m;
}

/// Phi(f): A -> f A (f^-1 x, f^-1 y) on W(V_n, e), in the alpha basis.
/// Requires f invertible with f(e) = e.
template <class Field>
Matrix<typename Field::value_type> induced_automorphism(const Field& fld, const Matrix<typename Field::value_type>& f,
                                                        const Vec<typename Field::value_type>& e) {
  using T = typename Field::value_type;
  const std::size_t n = f.rows();
  if (!f.is_square() || e.size() != n) throw std::invalid_argument("induced_automorphism: dimension mismatch");
  const auto f_inv = inverse(f, fld.one());
  if (!f_inv) throw std::invalid_argument("induced_automorphism: f is singular");
  if (mat_vec(f, e) != e) throw std::invalid_argument("induced_automorphism: f does not fix e");
  const std::size_t dim = n * n * n;
  Matrix<T> out(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    const BilMap<T> basis(n, unit_vector(dim, col, fld.one()));
    const auto image = transport(f, *f_inv, basis);
    for (std::size_t row = 0; row < dim; ++row) out(row, col) = image.flat()[row];
  }
  return out;
}

/// Phi(f) on W(2) written in e-coordinates.
template <class Field>
Matrix<typename Field::value_type> induced_automorphism_e(const Field& fld,
                                                          const Matrix<typename Field::value_type>& f) {
  using T = typename Field::value_type;
  if (f.rows() != 2 || f.cols() != 2) throw std::invalid_argument("induced_automorphism_e: f must be 2x2");
  const auto phi = induced_automorphism(fld, f, Vec<T>{fld.one(), fld.zero()});
  return e_from_alpha(fld) * phi * e_change_of_basis(fld);
}

namespace detail {

template <class T>
Matrix<T> leading_block(const Matrix<T>& m, std::size_t d) {
  Matrix<T> out(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) out(r, c) = m(r, c);
  return out;
}

}  // namespace detail

/// T_a on W(2), W_2 or S_2 in e-coordinates:
///   e1 -> e1 + 2a e3 + 3a^2 e4, e2 -> e2 + a e1 + a^2 e3 + a^3 e4, e3 -> e3 + 3a e4,
///   e5 -> e5 - a e6, e8 -> e8 + a e7, e4, e6, e7 fixed.
template <class Field>
Matrix<typename Field::value_type> t_map(const Field& fld, const typename Field::value_type& a,
                                         AlgebraTag tag = AlgebraTag::w2) {
  using T = typename Field::value_type;
  Matrix<T> m = Matrix<T>::identity(kW2Dim, fld.one());
  const T a2 = a * a;
  m(2, 0) = fld.from_int(2) * a;
  m(3, 0) = fld.from_int(3) * a2;
  m(0, 1) = a;
  m(2, 1) = a2;
  m(3, 1) = a2 * a;
  m(3, 2) = fld.from_int(3) * a;
  m(5, 4) = -a;
  m(6, 7) = a;
  return detail::leading_block(m, tag_dim(tag));
}

/// S_b in e-coordinates: e2 -> e2 / b, e3 -> b e3, e4 -> b^2 e4, e6 -> b e6,
/// e7 -> b e7, e1, e5, e8 fixed.
template <class Field>
Matrix<typename Field::value_type> s_map(const Field& fld, const typename Field::value_type& b,
                                         AlgebraTag tag = AlgebraTag::w2) {
  using T = typename Field::value_type;
  if (is_zero(b)) throw std::invalid_argument("s_map: b must be nonzero");
  Matrix<T> m = Matrix<T>::identity(kW2Dim, fld.one());
  m(1, 1) = fld.one() / b;
  m(2, 2) = b;
  m(3, 3) = b * b;
  m(5, 5) = b;
  m(6, 6) = b;
  return detail::leading_block(m, tag_dim(tag));
}

/// S_b T_a on the algebra.
template <class Field>
Matrix<typename Field::value_type> affine_map(const Field& fld, const AffineParam<typename Field::value_type>& g,
                                              AlgebraTag tag = AlgebraTag::w2) {
  return s_map(fld, g.b, tag) * t_map(fld, g.a, tag);
}

}  // namespace kantor
