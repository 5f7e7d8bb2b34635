#pragma once

// The classified one-sided ideals of W(2), W_2 and S_2, written in e-coordinates.
//   W(2): W_ab = <e1..e4, a e5 + b e8, -a e6 + b e7>, I1 = <e1..e4>,
//         I2 = <e5..e8>, w_ab = <a e5 + b e8, -a e6 + b e7>
//   W_2:  <e1..e4>, <e5, e6>
//   S_2:  none besides 0 and the whole algebra
// plus the left annihilators, which bound every right ideal.

#include "kantor/algebra/w2.hpp"
#include "kantor/ideals/ideals.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kantor {

enum class IdealTag { W_ab, I1, I2, w_ab, W2_4dim, W2_2dim, Annl_W2, Annl_S2, Annl_W2x2, Trivial_Zero, Trivial_Full };

inline std::string ideal_tag_name(IdealTag t) {
  switch (t) {
    case IdealTag::W_ab: return "W_ab";
    case IdealTag::I1: return "I1";
    case IdealTag::I2: return "I2";
    case IdealTag::w_ab: return "w_ab";
    case IdealTag::W2_4dim: return "W2_4dim";
    case IdealTag::W2_2dim: return "W2_2dim";
    case IdealTag::Annl_W2: return "Annl_W2";
    case IdealTag::Annl_S2: return "Annl_S2";
    case IdealTag::Annl_W2x2: return "Annl_W2x2";
    case IdealTag::Trivial_Zero: return "Trivial_Zero";
    case IdealTag::Trivial_Full: return "Trivial_Full";
  }
  return "?";
}

/// Annl_W2 is Ann_l(W(2)), Annl_W2x2 is Ann_l(W_2). The trivial tags need
/// the ambient algebra, so every family records it.
template <class T>
struct IdealFamily {
  IdealTag tag = IdealTag::Trivial_Zero;
  AlgebraTag algebra = AlgebraTag::w2;
  std::optional<std::pair<T, T>> params;

  std::string label() const {
    std::string s = ideal_tag_name(tag);
    if (params) s += "(" + to_string(params->first) + "," + to_string(params->second) + ")";
    return s;
  }

  friend bool operator==(const IdealFamily& a, const IdealFamily& b) {
    return a.tag == b.tag && a.algebra == b.algebra && a.params == b.params;
  }
};

inline bool is_parametric(IdealTag t) { return t == IdealTag::W_ab || t == IdealTag::w_ab; }

inline AlgebraTag home_algebra(IdealTag t, AlgebraTag fallback) {
  switch (t) {
    case IdealTag::W_ab:
    case IdealTag::I1:
    case IdealTag::I2:
    case IdealTag::w_ab:
    case IdealTag::Annl_W2: return AlgebraTag::w2;
    case IdealTag::W2_4dim:
    case IdealTag::W2_2dim:
    case IdealTag::Annl_W2x2: return AlgebraTag::w2_comm;
    case IdealTag::Annl_S2: return AlgebraTag::s2;
    default: return fallback;
  }
}

/// Scales (a, b) so that the first nonzero entry is 1.
template <class T>
std::pair<T, T> projective_normalize(const T& a, const T& b) {
  if (is_zero(a) && is_zero(b)) throw std::invalid_argument("ideal family parameters (0, 0) are not allowed");
  const T& lead = is_zero(a) ? b : a;
  const T inv = unit_like(lead) / lead;
  return {a * inv, b * inv};
}

template <class T>
IdealFamily<T> make_family(IdealTag tag, AlgebraTag algebra = AlgebraTag::w2) {
  if (is_parametric(tag)) throw std::invalid_argument(ideal_tag_name(tag) + " needs parameters");
  return {tag, home_algebra(tag, algebra), std::nullopt};
}

template <class T>
IdealFamily<T> make_family(IdealTag tag, const T& a, const T& b) {
  if (!is_parametric(tag)) throw std::invalid_argument(ideal_tag_name(tag) + " takes no parameters");
  return {tag, AlgebraTag::w2, projective_normalize(a, b)};
}

/// Stated generating sets of the left annihilators.
template <class Field>
std::vector<Vec<typename Field::value_type>> annihilator_generators(const Field& fld, AlgebraTag alg) {
  using T = typename Field::value_type;
  const std::size_t n = tag_dim(alg);
  auto v = [&](std::initializer_list<std::pair<int, int>> terms) {
    Vec<T> x(n);
    for (auto [k, c] : terms) x.at(static_cast<std::size_t>(k - 1)) += fld.from_int(c);
    return x;
  };
  switch (alg) {
    case AlgebraTag::w2: return {v({{4, 1}}), v({{5, 1}, {1, -2}, {8, -3}}), v({{3, 1}, {6, 1}}), v({{3, 1}, {7, 1}})};
    case AlgebraTag::w2_comm: return {v({{4, 1}}), v({{3, 1}, {6, 1}})};
    case AlgebraTag::s2: return {v({{4, 1}})};
  }
  return {};
}

template <class Field>
Subspace<typename Field::value_type> family_subspace(const Field& fld, const IdealFamily<typename Field::value_type>& f) {
  using T = typename Field::value_type;
  const std::size_t n = tag_dim(f.algebra);
  if (is_parametric(f.tag)) {
    if (!f.params) throw std::invalid_argument(ideal_tag_name(f.tag) + " needs parameters");
    const auto& [a, b] = *f.params;
    if (is_zero(a) && is_zero(b)) throw std::invalid_argument("ideal family parameters (0, 0) are not allowed");
    Vec<T> x(8), y(8);
    x[4] = a, x[7] = b;
    y[5] = -a, y[6] = b;
    std::vector<Vec<T>> gens{x, y};
    if (f.tag == IdealTag::W_ab)
      for (int k = 1; k <= 4; ++k) gens.push_back(unit_vector(std::size_t{8}, static_cast<std::size_t>(k - 1), fld.one()));
    return Subspace<T>::span(8, gens);
  }
  if (f.params) throw std::invalid_argument(ideal_tag_name(f.tag) + " takes no parameters");
  switch (f.tag) {
    case IdealTag::I1: return e_span(fld, 8, {1, 2, 3, 4});
    case IdealTag::I2: return e_span(fld, 8, {5, 6, 7, 8});
    case IdealTag::W2_4dim: return e_span(fld, 6, {1, 2, 3, 4});
    case IdealTag::W2_2dim: return e_span(fld, 6, {5, 6});
    case IdealTag::Annl_W2: return Subspace<T>::span(8, annihilator_generators(fld, AlgebraTag::w2));
    case IdealTag::Annl_W2x2: return Subspace<T>::span(6, annihilator_generators(fld, AlgebraTag::w2_comm));
    case IdealTag::Annl_S2: return Subspace<T>::span(4, annihilator_generators(fld, AlgebraTag::s2));
    case IdealTag::Trivial_Zero: return Subspace<T>::zero(n);
    case IdealTag::Trivial_Full: return Subspace<T>::full(n, fld.one());
    default: break;
  }
  throw std::logic_error("family_subspace: unhandled tag");
}

/// Names a left ideal of the given algebra. Throws if s is not a left ideal;
/// returns nothing when s matches no classified family.
template <class Field>
std::optional<IdealFamily<typename Field::value_type>> classify_left_ideal(
    const Field& fld, AlgebraTag alg, const Subspace<typename Field::value_type>& s,
    const MultiplicationOperators<typename Field::value_type>* ops = nullptr) {
  using T = typename Field::value_type;
  using Family = IdealFamily<T>;
  const std::size_t n = tag_dim(alg);
  s.check_ambient(n);
  if (ops == nullptr) {
    const MultiplicationOperators<T> own(algebra_by_tag(fld, alg), fld.one());
    if (!own.is_left_ideal(s)) throw std::invalid_argument("classify_left_ideal: subspace is not a left ideal");
  } else if (!ops->is_left_ideal(s)) {
    throw std::invalid_argument("classify_left_ideal: subspace is not a left ideal");
  }
  if (s.is_zero()) return make_family<T>(IdealTag::Trivial_Zero, alg);
  if (s.is_full()) return make_family<T>(IdealTag::Trivial_Full, alg);

  auto matches = [&](const Family& f) -> std::optional<Family> {
    if (family_subspace(fld, f) == s) return f;
    return std::nullopt;
  };
  switch (alg) {
    case AlgebraTag::s2: return std::nullopt;
    case AlgebraTag::w2_comm:
      if (auto f = matches(make_family<T>(IdealTag::W2_4dim))) return f;
      return matches(make_family<T>(IdealTag::W2_2dim));
    case AlgebraTag::w2: break;
  }
  if (auto f = matches(make_family<T>(IdealTag::I1))) return f;
  if (auto f = matches(make_family<T>(IdealTag::I2))) return f;
  if (s.dim() != 6 && s.dim() != 2) return std::nullopt;
  // Both parametric families meet <e5, e8> exactly in the line through a e5 + b e8.
  const auto line = subspace_intersect(s, e_span(fld, 8, {5, 8}), fld.one());
  if (line.dim() != 1) return std::nullopt;
  const auto v = line.basis_vector(0);
  return matches(make_family(s.dim() == 6 ? IdealTag::W_ab : IdealTag::w_ab, v[4], v[7]));
}

/// A left ideal Y2 with Y1 + Y2 = whole algebra and Y1 ∩ Y2 = 0, taken from
/// the classified families. Throws if y1 is not a left ideal or no such
/// complement is among the families.
template <class Field>
Subspace<typename Field::value_type> complement_left_ideal(const Field& fld, AlgebraTag alg,
                                                           const Subspace<typename Field::value_type>& y1) {
  using T = typename Field::value_type;
  const auto family = classify_left_ideal(fld, alg, y1);
  if (!family) throw std::logic_error("complement_left_ideal: left ideal outside the classified families");
  auto independent = [&](const std::pair<T, T>& ab) {
    // (0, 1) is independent of (a, b) unless a = 0, in which case (1, 0) is.
    return is_zero(ab.first) ? std::pair<T, T>{fld.one(), fld.zero()} : std::pair<T, T>{fld.zero(), fld.one()};
  };
  IdealFamily<T> other;
  switch (family->tag) {
    case IdealTag::Trivial_Zero: other = make_family<T>(IdealTag::Trivial_Full, alg); break;
    case IdealTag::Trivial_Full: other = make_family<T>(IdealTag::Trivial_Zero, alg); break;
    case IdealTag::I1: other = make_family<T>(IdealTag::I2); break;
    case IdealTag::I2: other = make_family<T>(IdealTag::I1); break;
    case IdealTag::W2_4dim: other = make_family<T>(IdealTag::W2_2dim); break;
    case IdealTag::W2_2dim: other = make_family<T>(IdealTag::W2_4dim); break;
    case IdealTag::W_ab: {
      const auto ab = independent(*family->params);
      other = make_family(IdealTag::w_ab, ab.first, ab.second);
      break;
    }
    case IdealTag::w_ab: {
      const auto ab = independent(*family->params);
      other = make_family(IdealTag::W_ab, ab.first, ab.second);
      break;
    }
    default: throw std::logic_error("complement_left_ideal: unexpected family " + family->label());
  }
  auto y2 = family_subspace(fld, other);
  if (!is_direct_sum(y1, y2) || !is_left_ideal(algebra_by_tag(fld, alg), y2, fld.one())) {
    throw std::logic_error("complement_left_ideal: " + other.label() + " is not a complement of " + family->label());
  }
  return y2;
}

}  // namespace kantor
