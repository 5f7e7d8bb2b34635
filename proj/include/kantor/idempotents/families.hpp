#pragma once

// The four families of idempotents of W(2), in e-coordinates:
//   w1(c)   = -(2c+1) e1 + e2 + c e5 + (3c+1) e8
//   w2(c,d) = -e1 + c (e5 - 2e1) + d e8
//   w3(c,d) = -e1 - 2e8 + 4e3 + e6 + 3e7 + c (3e8 - e5 + 2e1) + d e4
//   w4(c,q) = -e1 - 2e8 + c (3e8 - e5 + 2e1) + q e4,   q a square-class representative
// Every nonzero idempotent lies in the orbit of exactly one of these.

#include "kantor/algebra/w2.hpp"
#include "kantor/exactmath/multipoly.hpp"
#include "kantor/idempotents/square_class.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace kantor {

enum class IdempotentTag { w1, w2, w3, w4 };

inline std::string idempotent_tag_name(IdempotentTag t) {
  switch (t) {
    case IdempotentTag::w1: return "w1";
    case IdempotentTag::w2: return "w2";
    case IdempotentTag::w3: return "w3";
    case IdempotentTag::w4: return "w4";
  }
  return "?";
}

inline constexpr IdempotentTag kIdempotentTags[] = {IdempotentTag::w1, IdempotentTag::w2, IdempotentTag::w3,
                                                    IdempotentTag::w4};

/// `d` is the second parameter: d for w2 and w3, q for w4, unused for w1.
template <class T>
struct IdempotentFamily {
  IdempotentTag tag = IdempotentTag::w1;
  T c{};
  T d{};

  std::string label() const {
    if (tag == IdempotentTag::w1) return "w1(" + to_string(c) + ")";
    return idempotent_tag_name(tag) + "(" + to_string(c) + "," + to_string(d) + ")";
  }

  friend bool operator==(const IdempotentFamily& a, const IdempotentFamily& b) {
    return a.tag == b.tag && a.c == b.c && (a.tag == IdempotentTag::w1 || a.d == b.d);
  }
};

/// k * one for a small integer k, in any ring with a unit.
template <class V>
V small_multiple(int k, const V& one) {
  V out = one - one;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out = k < 0 ? out - one : out + one;
  return out;
}

/// The family formulas over any coefficient ring (scalars or polynomials).
template <class V>
Vec<V> w_element(IdempotentTag tag, const V& c, const V& d, const V& one) {
  auto k = [&](int n) { return small_multiple(n, one); };
  Vec<V> x(kW2Dim, one - one);
  switch (tag) {
    case IdempotentTag::w1:
      x[0] = -(k(2) * c + one);
      x[1] = one;
      x[4] = c;
      x[7] = k(3) * c + one;
      break;
    case IdempotentTag::w2:
      x[0] = -one - k(2) * c;
      x[4] = c;
      x[7] = d;
      break;
    case IdempotentTag::w3:
    case IdempotentTag::w4:
      x[0] = -one + k(2) * c;
      x[4] = -c;
      x[7] = k(-2) + k(3) * c;
      x[3] = d;
      if (tag == IdempotentTag::w3) {
        x[2] = k(4);
        x[5] = one;
        x[6] = k(3);
      }
      break;
  }
  return x;
}

template <class T>
void check_family(const IdempotentFamily<T>& f) {
  if (f.tag == IdempotentTag::w4 && !is_square_class_rep(f.d)) {
    throw std::invalid_argument("w4: q = " + to_string(f.d) + " is not a canonical square-class representative");
  }
}

template <class Field>
Vec<typename Field::value_type> family_element(const Field& fld, const IdempotentFamily<typename Field::value_type>& f) {
  check_family(f);
  return w_element(f.tag, f.c, f.tag == IdempotentTag::w1 ? fld.zero() : f.d, fld.one());
}

/// Coordinates as polynomials in c (and d, or q for w4).
inline ParamVec family_element_parametric(IdempotentTag tag) {
  const auto c = MultiPoly::variable("c");
  const auto d = MultiPoly::variable(tag == IdempotentTag::w4 ? "q" : "d");
  return w_element(tag, c, tag == IdempotentTag::w1 ? MultiPoly(0) : d, MultiPoly(1));
}

template <class T, class V>
bool is_idempotent(const AlgebraDef<T>& w2, const Vec<V>& x) {
  return eval_mul(w2, x, x) == x;
}

/// w(params)^2 - w(params) vanishes identically as a polynomial vector.
inline bool parametric_idempotent_check(IdempotentTag tag) {
  const auto w2 = w2_algebra(RationalField{});
  const auto x = family_element_parametric(tag);
  const auto sq = eval_mul(w2, x, x);
  for (std::size_t k = 0; k < kW2Dim; ++k)
    if (!(sq[k] - x[k]).is_zero()) return false;
  return true;
}

/// The family whose coordinate pattern x matches, if any.
template <class Field>
std::optional<IdempotentFamily<typename Field::value_type>> family_membership(const Field& fld,
                                                                              const Vec<typename Field::value_type>& x) {
  using T = typename Field::value_type;
  if (x.size() != kW2Dim) throw std::invalid_argument("family_membership: expected 8 e-coordinates");
  const T zero = fld.zero();
  // The pattern fixes every coordinate once c and d are read off, so the
  // candidate matches iff it reproduces x.
  auto try_family = [&](IdempotentTag tag, const T& c, const T& d) -> std::optional<IdempotentFamily<T>> {
    IdempotentFamily<T> f{tag, c, tag == IdempotentTag::w1 ? zero : d};
    if (tag == IdempotentTag::w4 && !is_square_class_rep(d)) return std::nullopt;
    if (family_element(fld, f) == x) return f;
    return std::nullopt;
  };
  if (auto f = try_family(IdempotentTag::w1, p(x, 5), zero)) return f;
  if (auto f = try_family(IdempotentTag::w2, p(x, 5), p(x, 8))) return f;
  if (auto f = try_family(IdempotentTag::w3, -p(x, 5), p(x, 4))) return f;
  if (auto f = try_family(IdempotentTag::w4, -p(x, 5), p(x, 4))) return f;
  return std::nullopt;
}

}  // namespace kantor
