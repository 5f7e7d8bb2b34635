#pragma once

// The 2-dimensional algebras W1(t), W2(t,s), W3(t,s), W4(t,u) and their
// correspondence with the idempotent families:
//   W1(t)   <-> w1((t-2)/6)
//   W2(t,s) <-> w2((t+s-2)/6, (t-s)/2)
//   W3(t,s) <-> S_{1/6} w3((3-t)/6, 36 s)
//   W4(t,u) <-> w4((3-t)/6, u)
// "Corresponds" means: the multiplication tensor of the algebra, read as an
// element of W(2), has these e-coordinates.

#include "kantor/idempotents/canonicalize.hpp"

#include <stdexcept>
#include <string>

namespace kantor {

enum class LTag { W1, W2, W3, W4 };

inline std::string l_tag_name(LTag t) {
  switch (t) {
    case LTag::W1: return "W1";
    case LTag::W2: return "W2";
    case LTag::W3: return "W3";
    case LTag::W4: return "W4";
  }
  return "?";
}

inline LTag parse_l_tag(std::string_view s) {
  if (s == "W1") return LTag::W1;
  if (s == "W2") return LTag::W2;
  if (s == "W3") return LTag::W3;
  if (s == "W4") return LTag::W4;
  throw std::invalid_argument("unknown family '" + std::string(s) + "' (expected W1..W4)");
}

/// `s` is the second parameter: s for W2 and W3, u for W4, unused for W1.
template <class T>
struct LAlgebra {
  LTag tag = LTag::W1;
  T t{};
  T s{};

  std::string label() const {
    if (tag == LTag::W1) return "W1(" + to_string(t) + ")";
    return l_tag_name(tag) + "(" + to_string(t) + "," + to_string(s) + ")";
  }

  friend bool operator==(const LAlgebra& a, const LAlgebra& b) {
    return a.tag == b.tag && a.t == b.t && (a.tag == LTag::W1 || a.s == b.s);
  }
};

/// The multiplication table over any coefficient ring.
template <class V>
BilMap<V> l_table(LTag tag, const V& t, const V& s, const V& one) {
  BilMap<V> m(2, Vec<V>(8, one - one));
  // m(i, j, k): coefficient of v_{k+1} in v_{i+1} v_{j+1}.
  switch (tag) {
    case LTag::W1:
      m(0, 0, 0) = -one, m(0, 0, 1) = one;
      m(0, 1, 1) = t;
      break;
    case LTag::W2:
      m(0, 0, 0) = -one;
      m(0, 1, 1) = t;
      m(1, 0, 1) = s;
      break;
    case LTag::W3:
      m(0, 0, 0) = -one;
      m(0, 1, 1) = -one;
      m(1, 0, 1) = t, m(1, 0, 0) = -one;
      m(1, 1, 1) = one, m(1, 1, 0) = s;
      break;
    case LTag::W4:
      m(0, 0, 0) = -one;
      m(0, 1, 1) = -one;
      m(1, 0, 1) = t;
      m(1, 1, 0) = s;
      break;
  }
  return m;
}

template <class T>
void check_l_algebra(const LAlgebra<T>& l) {
  if (l.tag == LTag::W4 && !is_square_class_rep(l.s)) {
    throw std::invalid_argument("W4: u = " + to_string(l.s) + " is not a canonical square-class representative");
  }
}

template <class Field>
AlgebraDef<typename Field::value_type> l_algebra(const Field& fld, const LAlgebra<typename Field::value_type>& l) {
  check_l_algebra(l);
  auto table = l_table(l.tag, l.t, l.tag == LTag::W1 ? fld.zero() : l.s, fld.one());
  return AlgebraDef<typename Field::value_type>(2, table.flat(), {"v1", "v2"});
}

/// The e-coordinates the correspondence predicts for an L-member, over any
/// coefficient ring V whose scalars include 1/6.
template <class Field, class V>
Vec<V> l_expected_coords(const Field& fld, LTag tag, const V& t, const V& s, const V& one) {
  const auto sixth = fld.one() / fld.from_int(6);
  auto k = [&](int n) { return small_multiple(n, one); };
  switch (tag) {
    case LTag::W1: return w_element(IdempotentTag::w1, (t - k(2)) * sixth, one - one, one);
    case LTag::W2:
      return w_element(IdempotentTag::w2, (t + s - k(2)) * sixth, (t - s) * (fld.one() / fld.from_int(2)), one);
    case LTag::W3:
      return mat_vec(s_map(fld, sixth), w_element(IdempotentTag::w3, (k(3) - t) * sixth, k(36) * s, one));
    case LTag::W4: return w_element(IdempotentTag::w4, (k(3) - t) * sixth, s, one);
  }
  return {};
}

/// The tensor of l, read in e-coordinates, equals the predicted element.
template <class Field>
bool l_correspondence_check(const Field& fld, const LAlgebra<typename Field::value_type>& l) {
  check_l_algebra(l);
  const auto s = l.tag == LTag::W1 ? fld.zero() : l.s;
  const auto coords = to_e_coords(fld, l_table(l.tag, l.t, s, fld.one()));
  return coords == l_expected_coords(fld, l.tag, l.t, s, fld.one());
}

/// Same check with t and s (or u) as polynomial variables over Q.
inline bool l_correspondence_check_symbolic(LTag tag) {
  const RationalField q;
  const auto t = MultiPoly::variable("t");
  const auto s = tag == LTag::W1 ? MultiPoly(0) : MultiPoly::variable(tag == LTag::W4 ? "u" : "s");
  const auto coords = to_e_coords(q, l_table(tag, t, s, MultiPoly(1)));
  const auto expected = l_expected_coords(q, tag, t, s, MultiPoly(1));
  for (std::size_t k = 0; k < kW2Dim; ++k)
    if (!(coords[k] - expected[k]).is_zero()) return false;
  return true;
}

/// The L-member in the orbit of a canonical family element, with the extra
/// W(2)-automorphism taking the family element to the member's tensor.
template <class Field>
std::pair<LAlgebra<typename Field::value_type>, AffineParam<typename Field::value_type>> l_member_of(
    const Field& fld, const IdempotentFamily<typename Field::value_type>& f) {
  using T = typename Field::value_type;
  const T one = fld.one();
  const auto id = AffineParam<T>::identity(one);
  auto k = [&](int n) { return fld.from_int(n); };
  switch (f.tag) {
    case IdempotentTag::w1: return {{LTag::W1, k(6) * f.c + k(2), fld.zero()}, id};
    case IdempotentTag::w2: return {{LTag::W2, k(3) * f.c + one + f.d, k(3) * f.c + one - f.d}, id};
    case IdempotentTag::w3: return {{LTag::W3, k(3) - k(6) * f.c, f.d / k(36)}, {fld.zero(), one / k(6)}};
    case IdempotentTag::w4: return {{LTag::W4, k(3) - k(6) * f.c, f.d}, id};
  }
  throw std::logic_error("l_member_of: unhandled family");
}

template <class T>
struct QuasiUnitForm {
  LAlgebra<T> member;
  /// phi: R -> member with phi(e) = v1; column j is the image of R's basis vector j.
  Matrix<T> iso;
  /// The W(2)-automorphism S_b T_a taking R's transported tensor to the member's.
  AffineParam<T> transform;
  CanonicalLabel<T> label;
};

/// The unique L-member isomorphic to `alg` by an isomorphism sending e to v1.
template <class Field>
QuasiUnitForm<typename Field::value_type> canonical_quasiunit_form(const Field& fld,
                                                                   const AlgebraDef<typename Field::value_type>& alg,
                                                                   const Vec<typename Field::value_type>& e) {
  using T = typename Field::value_type;
  if (alg.dim() != 2) throw std::invalid_argument("canonical_quasiunit_form: the algebra must be 2-dimensional");
  if (e.size() != 2) throw std::invalid_argument("canonical_quasiunit_form: e must have 2 coordinates");
  if (is_zero_vector(e)) throw std::invalid_argument("canonical_quasiunit_form: e = 0");
  const BilMap<T> mult(2, alg.tensor());
  if (mult.is_zero_map()) throw std::invalid_argument("canonical_quasiunit_form: zero algebra");

  // Basis completion (e, u) of R; phi0 = its inverse sends e to v1.
  Matrix<T> completion(2, 2);
  completion(0, 0) = e[0], completion(1, 0) = e[1];
  if (is_zero(e[0])) completion(0, 1) = fld.one();
  else completion(1, 1) = fld.one();
  const auto phi0 = *inverse(completion, fld.one());
  const auto x = to_e_coords(fld, transport(phi0, completion, mult));
  const auto w2 = w2_algebra(fld);
  if (!is_idempotent(w2, x)) {
    throw std::invalid_argument("canonical_quasiunit_form: e is not a left quasi-unit (the transported multiplication "
                                "is not an idempotent of W(2))");
  }

  auto label = canonicalize_idempotent(fld, x, &w2);
  const auto [member, extra] = l_member_of(fld, label.family);
  const auto total = compose(extra, label.transform);
  const auto iso = v2_matrix(total) * phi0;
  const auto member_table = l_table(member.tag, member.t, member.s, fld.one());
  if (!(transport(iso, *inverse(iso, fld.one()), mult).flat() == member_table.flat())) {
    throw FalsificationError("quasi-unit form", "the composite map is not an isomorphism onto " + member.label());
  }
  return {member, iso, total, std::move(label)};
}

}  // namespace kantor
