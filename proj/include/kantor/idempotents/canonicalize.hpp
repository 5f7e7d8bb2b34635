#pragma once

// Canonical form of a nonzero idempotent of W(2) under Aut(W(2)) = { S_b T_a }.
//
// Write p_k for the k-th e-coordinate and D = p8 - p5 - 2 p1.
//   case 1   p2 != 0:          b = p2, a = -(p1 + 2 p5 + 1) / p2      -> w1(p5)
//   case 2   p2 = 0, D != 0:   a = (p3 - p6 - p7) / D                  -> w2(p5, p8)
//   case 3   p2 = 0, D = 0:    a = (p3 - 4 p6) / 2, y = T_a x, then
//     3a     p6(y) != 0:       b = 1 / p6(y)                           -> w3(-p5, p4)
//     3b     p6(y) = p4(y) = 0                                         -> w2(p5, p8)
//     3b'    p6(y) = 0, p4(y) != 0: (q, b) = square class of p4(y)     -> w4(-p5, q)
// T_a shifts p1 + 2 p5 by a p2 and p3 - p6 - p7 by -a D, which is where the
// case 1 and case 2 shears come from. Each step's postcondition is checked;
// a failure throws FalsificationError rather than returning a wrong label.

#include "kantor/idempotents/families.hpp"
#include "kantor/morphisms/affine.hpp"

#include <stdexcept>
#include <string>

namespace kantor {

/// A step of the classification argument produced something it should not have.
class FalsificationError : public std::runtime_error {
 public:
  FalsificationError(std::string step, const std::string& what)
      : std::runtime_error("falsified at " + step + ": " + what), step_(std::move(step)) {}
  const std::string& step() const { return step_; }

 private:
  std::string step_;
};

/// S_b T_a (input) = family_element(family), with transform = (a, b).
template <class T>
struct CanonicalLabel {
  IdempotentFamily<T> family;
  AffineParam<T> transform;
  std::string case_id;
};

namespace detail {

inline std::string coords_string(const auto& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + to_string(x[i]);
  return s + ")";
}

}  // namespace detail

/// `w2` may be passed in to avoid rebuilding W(2) on every call.
template <class Field>
CanonicalLabel<typename Field::value_type> canonicalize_idempotent(
    const Field& fld, const Vec<typename Field::value_type>& x,
    const AlgebraDef<typename Field::value_type>* w2 = nullptr) {
  using T = typename Field::value_type;
  if (x.size() != kW2Dim) throw std::invalid_argument("canonicalize_idempotent: expected 8 e-coordinates");
  if (is_zero_vector(x)) throw std::invalid_argument("canonicalize_idempotent: x = 0");
  std::optional<AlgebraDef<T>> own;
  if (w2 == nullptr) w2 = &own.emplace(w2_algebra(fld));
  if (!is_idempotent(*w2, x)) throw std::invalid_argument("canonicalize_idempotent: x is not an idempotent of W(2)");

  const T zero = fld.zero(), one = fld.one(), two = fld.from_int(2), four = fld.from_int(4);
  auto act = [&](const AffineParam<T>& g, const Vec<T>& v) { return mat_vec(affine_map(fld, g), v); };
  auto require = [&](bool ok, const std::string& step, const std::string& what) {
    if (!ok) throw FalsificationError(step, what + " for x = " + detail::coords_string(x));
  };
  auto finish = [&](IdempotentFamily<T> family, AffineParam<T> g, const std::string& step) {
    const auto y = act(g, x);
    require(family_element(fld, family) == y, step, "transformed element " + detail::coords_string(y) +
                                                        " differs from " + family.label());
    require(family_membership(fld, y) == std::optional(family), step, "membership pattern disagrees");
    return CanonicalLabel<T>{family, g, step};
  };

  // Every nonzero idempotent with p2 = 0 has p1 + 2 p5 = -1.
  if (!is_zero(p(x, 2))) {
    const AffineParam<T> g{-(p(x, 1) + two * p(x, 5) + one) / p(x, 2), p(x, 2)};
    const auto y = act(g, x);
    require(p(y, 2) == one && p(y, 1) + two * p(y, 5) == -one, "case1", "normalization p2 = 1, p1 + 2 p5 = -1 failed");
    return finish({IdempotentTag::w1, p(y, 5), zero}, g, "case1");
  }
  require(p(x, 1) + two * p(x, 5) == -one, "p2=0", "p1 + 2 p5 != -1");

  const T denom = p(x, 8) - p(x, 5) - two * p(x, 1);
  if (!is_zero(denom)) {
    const AffineParam<T> g{(p(x, 3) - p(x, 6) - p(x, 7)) / denom, one};
    const auto y = act(g, x);
    require(is_zero(p(y, 3) - p(y, 6) - p(y, 7)), "case2", "p3 - p6 - p7 != 0 after the shear");
    return finish({IdempotentTag::w2, p(y, 5), p(y, 8)}, g, "case2");
  }

  require(p(x, 3) == p(x, 6) + p(x, 7), "case3", "p3 != p6 + p7");
  const T a = (p(x, 3) - four * p(x, 6)) / two;
  const auto y = act({a, one}, x);
  require(four * p(y, 6) == p(y, 3), "case3", "4 p6 != p3 after the shear");
  if (!is_zero(p(y, 6))) {
    const AffineParam<T> g{a, one / p(y, 6)};
    const auto z = act(g, x);
    return finish({IdempotentTag::w3, -p(z, 5), p(z, 4)}, g, "case3a");
  }
  require(is_zero(p(y, 3)) && is_zero(p(y, 7)), "case3b", "p3 or p7 nonzero while p6 = 0");
  if (is_zero(p(y, 4))) return finish({IdempotentTag::w2, p(y, 5), p(y, 8)}, {a, one}, "case3b");
  const auto sq = square_class_rep(p(y, 4));
  return finish({IdempotentTag::w4, -p(y, 5), sq.rep}, {a, sq.b}, "case3b'");
}

/// (a, b) with S_b T_a (b_mult) = a_mult when both multiplications on V_2
/// are nonzero idempotents of W(2) in the same orbit; nothing otherwise.
template <class Field>
std::optional<AffineParam<typename Field::value_type>> decide_v1_isomorphism(
    const Field& fld, const BilMap<typename Field::value_type>& a_mult,
    const BilMap<typename Field::value_type>& b_mult) {
  const auto w2 = w2_algebra(fld);
  const auto xa = to_e_coords(fld, a_mult);
  const auto xb = to_e_coords(fld, b_mult);
  for (const auto* x : {&xa, &xb}) {
    if (is_zero_vector(*x) || !is_idempotent(w2, *x)) {
      throw std::invalid_argument("decide_v1_isomorphism: v1 is not a left quasi-unit of a nonzero multiplication");
    }
  }
  const auto la = canonicalize_idempotent(fld, xa, &w2);
  const auto lb = canonicalize_idempotent(fld, xb, &w2);
  if (!(la.family == lb.family)) return std::nullopt;
  return compose(inverse(la.transform), lb.transform);
}

}  // namespace kantor
