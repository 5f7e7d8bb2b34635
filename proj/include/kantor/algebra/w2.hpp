#pragma once

// W(2) = W(V_2, v_1) in the basis e_1..e_8, and its subalgebras W_2
// (commutative multiplications, span e_1..e_6) and S_2 (commutative with
// trace zero, span e_1..e_4).

#include "kantor/algebra/bilinear.hpp"
#include "kantor/exactmath/field.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kantor {

inline constexpr std::size_t kW2Dim = 8;

/// alpha^k_ij with 1-based indices, flattened the way BilMap stores it.
constexpr std::size_t alpha_index(int i, int j, int k) {
  return static_cast<std::size_t>(((i - 1) * 2 + (j - 1)) * 2 + (k - 1));
}

/// CHANGE_OF_BASIS columns: alpha-coordinates of e_1..e_8.
inline const std::array<std::array<int, 8>, 8>& e_basis_alpha_coords() {
  static const auto table = [] {
    std::array<std::array<int, 8>, 8> e{};
    auto set = [&](int which, int coef, int i, int j, int k) { e[which - 1][alpha_index(i, j, k)] += coef; };
    set(1, 1, 1, 1, 1), set(1, -1, 1, 2, 2), set(1, -1, 2, 1, 2);
    set(2, 1, 1, 1, 2);
    set(3, 1, 2, 2, 2), set(3, -1, 1, 2, 1), set(3, -1, 2, 1, 1);
    set(4, 1, 2, 2, 1);
    set(5, 2, 1, 1, 1), set(5, 1, 1, 2, 2), set(5, 1, 2, 1, 2);
    set(6, 2, 2, 2, 2), set(6, 1, 1, 2, 1), set(6, 1, 2, 1, 1);
    set(7, 1, 1, 2, 1), set(7, -1, 2, 1, 1);
    set(8, 1, 1, 2, 2), set(8, -1, 2, 1, 2);
    return e;
  }();
  return table;
}

/// One cell of the W(2) multiplication table: coef * e_index (index 0 means 0).
struct TableCell {
  int coef;
  int index;
};

/// e_i * e_j for i, j = 1..8, as printed in the published table.
inline const std::array<std::array<TableCell, 8>, 8>& w2_published_table() {
  static const std::array<std::array<TableCell, 8>, 8> table = {{
      {{{-1, 1}, {-3, 2}, {1, 3}, {3, 4}, {-1, 5}, {1, 6}, {1, 7}, {-1, 8}}},
      {{{3, 2}, {0, 0}, {2, 1}, {1, 3}, {0, 0}, {-1, 5}, {1, 8}, {0, 0}}},
      {{{-2, 3}, {-1, 1}, {-3, 4}, {0, 0}, {1, 6}, {0, 0}, {0, 0}, {-1, 7}}},
      {{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}, {0, 0}}},
      {{{-2, 1}, {-3, 2}, {-1, 3}, {0, 0}, {-2, 5}, {-1, 6}, {-1, 7}, {-2, 8}}},
      {{{2, 3}, {1, 1}, {3, 4}, {0, 0}, {-1, 6}, {0, 0}, {0, 0}, {1, 7}}},
      {{{2, 3}, {1, 1}, {3, 4}, {0, 0}, {-1, 6}, {0, 0}, {0, 0}, {1, 7}}},
      {{{0, 0}, {1, 2}, {-1, 3}, {-2, 4}, {0, 0}, {-1, 6}, {-1, 7}, {0, 0}}},
  }};
  return table;
}

template <class Field>
Matrix<typename Field::value_type> e_change_of_basis(const Field& fld) {
  Matrix<typename Field::value_type> c(kW2Dim, kW2Dim);
  const auto& cols = e_basis_alpha_coords();
  for (std::size_t col = 0; col < kW2Dim; ++col)
    for (std::size_t row = 0; row < kW2Dim; ++row) c(row, col) = fld.from_int(cols[col][row]);
  return c;
}

/// Maps alpha-coordinates to e-coordinates (inverse of the change of basis).
template <class Field>
Matrix<typename Field::value_type> e_from_alpha(const Field& fld) {
  auto inv = inverse(e_change_of_basis(fld), fld.one());
  if (!inv) throw std::logic_error("e-basis change of basis is singular");
  return *inv;
}

template <class Field>
struct EBasis {
  std::vector<BilMap<typename Field::value_type>> elements;
  Matrix<typename Field::value_type> change_of_basis;
};

template <class Field>
EBasis<Field> e_basis(const Field& fld) {
  EBasis<Field> out{{}, e_change_of_basis(fld)};
  for (std::size_t col = 0; col < kW2Dim; ++col) out.elements.emplace_back(2, out.change_of_basis.column(col));
  if (rank(out.change_of_basis) != kW2Dim) throw std::logic_error("e-basis change of basis is singular");
  return out;
}

inline std::vector<std::string> e_labels(std::size_t count) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= count; ++i) labels.push_back("e" + std::to_string(i));
  return labels;
}

/// The published table over the given field, as an algebra.
template <class Field>
AlgebraDef<typename Field::value_type> w2_table_algebra(const Field& fld) {
  using T = typename Field::value_type;
  std::vector<T> tensor(kW2Dim * kW2Dim * kW2Dim);
  const auto& table = w2_published_table();
  for (std::size_t i = 0; i < kW2Dim; ++i)
    for (std::size_t j = 0; j < kW2Dim; ++j) {
      const auto cell = table[i][j];
      if (cell.index != 0) tensor[(i * kW2Dim + j) * kW2Dim + static_cast<std::size_t>(cell.index - 1)] = fld.from_int(cell.coef);
    }
  return AlgebraDef<T>(kW2Dim, std::move(tensor), e_labels(kW2Dim));
}

/// W(2) computed from the Kantor product with e = v_1 and re-expressed in
/// the e-basis. Throws std::logic_error if it disagrees with the published table.
template <class Field>
AlgebraDef<typename Field::value_type> w2_algebra(const Field& fld) {
  const auto alpha = kantor_algebra(fld, 2, Vec<typename Field::value_type>{fld.one(), fld.zero()});
  auto computed = change_basis(alpha, e_change_of_basis(fld), e_labels(kW2Dim), fld.one());
  if (!(computed == w2_table_algebra(fld))) {
    throw std::logic_error("W(2): Kantor construction disagrees with the published multiplication table");
  }
  return computed;
}

template <class Field>
Subspace<typename Field::value_type> e_span(const Field& fld, std::size_t ambient, std::vector<int> indices) {
  std::vector<Vec<typename Field::value_type>> vs;
  for (int i : indices) vs.push_back(unit_vector(ambient, static_cast<std::size_t>(i - 1), fld.one()));
  return Subspace<typename Field::value_type>::span(ambient, vs);
}

enum class AlgebraTag { w2, w2_comm, s2 };

inline std::string tag_name(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::w2: return "W(2)";
    case AlgebraTag::w2_comm: return "W_2";
    case AlgebraTag::s2: return "S_2";
  }
  return "?";
}

/// Accepts "W(2)"/"w2", "W_2"/"w2c", "S_2"/"s2".
inline AlgebraTag parse_algebra_tag(std::string_view s) {
  if (s == "W(2)" || s == "w(2)" || s == "w2" || s == "W2") return AlgebraTag::w2;
  if (s == "W_2" || s == "w_2" || s == "w2c") return AlgebraTag::w2_comm;
  if (s == "S_2" || s == "s_2" || s == "s2" || s == "S2") return AlgebraTag::s2;
  throw std::invalid_argument("unknown algebra '" + std::string(s) + "' (expected w2, w2c or s2)");
}

inline std::size_t tag_dim(AlgebraTag tag) {
  switch (tag) {
    case AlgebraTag::w2: return 8;
    case AlgebraTag::w2_comm: return 6;
    case AlgebraTag::s2: return 4;
  }
  return 0;
}

template <class Field>
AlgebraDef<typename Field::value_type> algebra_by_tag(const Field& fld, AlgebraTag tag) {
  const auto full = w2_algebra(fld);
  if (tag == AlgebraTag::w2) return full;
  const std::size_t d = tag_dim(tag);
  std::vector<int> idx;
  for (std::size_t i = 1; i <= d; ++i) idx.push_back(static_cast<int>(i));
  auto sub = restrict_subalgebra(full, e_span(fld, kW2Dim, idx), e_labels(d));
  if (!sub) throw std::logic_error(tag_name(tag) + " is not closed in W(2)");
  return *sub;
}

/// e-coordinates of a multiplication on V_2. V may be a polynomial ring over Q.
template <class Field, class V>
Vec<V> to_e_coords(const Field& fld, const BilMap<V>& b) {
  if (b.n() != 2) throw std::invalid_argument("e-coordinates exist only for n = 2");
  return mat_vec(e_from_alpha(fld), b.flat());
}

template <class Field, class V>
BilMap<V> from_e_coords(const Field& fld, const Vec<V>& coords) {
  if (coords.size() != kW2Dim) throw std::invalid_argument("from_e_coords: expected 8 coordinates");
  return BilMap<V>(2, mat_vec(e_change_of_basis(fld), coords));
}

/// p_k, k = 1..8.
template <class V>
const V& p(const Vec<V>& x, int k) {
  return x.at(static_cast<std::size_t>(k - 1));
}

}  // namespace kantor
