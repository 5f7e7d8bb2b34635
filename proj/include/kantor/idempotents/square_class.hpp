#pragma once

// Canonical representatives of F* / (F*)^2.
//   Q:     sign times a squarefree positive integer.
//   GF(p): 1 for squares, the smallest quadratic non-residue otherwise.

#include "kantor/exactmath/field.hpp"

#include <stdexcept>
#include <utility>

namespace kantor {

/// rep and b with b^2 s = rep.
template <class T>
struct SquareClass {
  T rep;
  T b;
};

namespace detail {

/// m = squarefree * root^2 for m > 0.
inline std::pair<Integer, Integer> squarefree_split(Integer m) {
  Integer squarefree = 1, root = 1;
  for (Integer d = 2; d * d <= m; ++d) {
    unsigned count = 0;
    while (m % d == 0) {
      m /= d;
      ++count;
    }
    for (unsigned i = 0; i < count / 2; ++i) root *= d;
    if (count % 2) squarefree *= d;
  }
  return {squarefree * m, root};
}

}  // namespace detail

inline SquareClass<Rational> square_class_rep(const Rational& s) {
  if (is_zero(s)) throw std::invalid_argument("square_class_rep: zero has no square class");
  const Integer num = boost::multiprecision::numerator(s);
  const Integer den = boost::multiprecision::denominator(s);
  // s = num den / den^2, so it suffices to split |num den|.
  const Integer m = num * den;
  const auto [squarefree, root] = detail::squarefree_split(m < 0 ? Integer(-m) : m);
  const Rational rep = m < 0 ? Rational(-squarefree) : Rational(squarefree);
  return {rep, Rational(den) / Rational(root)};
}

inline SquareClass<ModInt> square_class_rep(const ModInt& s) {
  if (is_zero(s)) throw std::invalid_argument("square_class_rep: zero has no square class");
  const std::uint32_t p = s.modulus();
  const ModInt rep = is_quadratic_residue(s) ? ModInt(1, p) : smallest_nonresidue(p);
  return {rep, sqrt_mod(rep / s)};
}

inline bool is_square_class_rep(const Rational& q) {
  if (is_zero(q) || boost::multiprecision::denominator(q) != 1) return false;
  return square_class_rep(q).rep == q;
}

inline bool is_square_class_rep(const ModInt& q) {
  if (is_zero(q)) return false;
  return square_class_rep(q).rep == q;
}

}  // namespace kantor
