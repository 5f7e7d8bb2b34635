#pragma once

// Brute-force ideal censuses over GF(p): every subspace (ambient dim <= 6),
// or the principal ideal of every element (any dim), labelled with the
// classified families. Anything outside the families is reported as a
// discrepancy, since the classification is proved in characteristic 0 only.

#include "kantor/ideals/families.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace kantor {

/// Number of k-dimensional subspaces of GF(p)^n.
inline Integer gaussian_binomial(std::size_t n, std::size_t k, std::uint32_t p) {
  if (k > n) return 0;
  Integer num = 1, den = 1;
  for (std::size_t i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(Integer(p), static_cast<unsigned>(n - i)) - 1;
    den *= boost::multiprecision::pow(Integer(p), static_cast<unsigned>(i + 1)) - 1;
  }
  return num / den;
}

inline Integer subspace_count(std::size_t n, std::uint32_t p, std::optional<std::size_t> dim_filter = std::nullopt) {
  if (dim_filter) return gaussian_binomial(n, *dim_filter, p);
  Integer total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += gaussian_binomial(n, k, p);
  return total;
}

inline constexpr std::size_t kMaxFullEnumerationDim = 6;

/// Calls visit(s) once for every subspace of GF(p)^n (of dimension
/// *dim_filter, if given), in a fixed order: by dimension, then pivot set in
/// lexicographic order, then free entries as base-p odometer.
inline void enumerate_subspaces(std::uint32_t p, std::size_t n, std::optional<std::size_t> dim_filter,
                                const std::function<void(const Subspace<ModInt>&)>& visit) {
  const PrimeField fld(p);
  if (n > kMaxFullEnumerationDim && !dim_filter) {
    throw std::invalid_argument("enumerate_subspaces: GF(" + std::to_string(p) + ")^" + std::to_string(n) + " has " +
                                subspace_count(n, p).str() + " subspaces; pass a dimension filter");
  }
  const std::size_t k_lo = dim_filter ? *dim_filter : 0;
  const std::size_t k_hi = dim_filter ? *dim_filter : n;
  if (k_hi > n) return;
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    std::vector<std::size_t> pivots(k);
    for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
    for (;;) {
      // Free entries: row r, column c > pivots[r] with c not a pivot.
      std::vector<bool> is_pivot(n, false);
      for (auto c : pivots) is_pivot[c] = true;
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = pivots[r] + 1; c < n; ++c)
          if (!is_pivot[c]) free.emplace_back(r, c);
      Matrix<ModInt> m(k, n);
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = fld.zero();
      for (std::size_t r = 0; r < k; ++r) m(r, pivots[r]) = fld.one();
      std::vector<std::uint32_t> digits(free.size(), 0);
      for (;;) {
        visit(Subspace<ModInt>::from_rref_unchecked(m, pivots));
        std::size_t pos = 0;
        while (pos < digits.size() && digits[pos] == p - 1) {
          digits[pos] = 0;
          m(free[pos].first, free[pos].second) = fld.zero();
          ++pos;
        }
        if (pos == digits.size()) break;
        ++digits[pos];
        m(free[pos].first, free[pos].second) = fld.element(digits[pos]);
      }
      // Next k-combination of {0..n-1}.
      std::size_t i = k;
      while (i > 0 && pivots[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pivots[i - 1];
      for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    }
  }
}

/// Every element of GF(p)^n whose first nonzero coordinate is 1, in
/// lexicographic order. Principal ideals are unchanged by scaling, so these
/// stand for all p^n - 1 nonzero elements.
inline void enumerate_projective_points(std::uint32_t p, std::size_t n,
                                        const std::function<void(const Vec<ModInt>&)>& visit) {
  const PrimeField fld(p);
  for (std::size_t lead = 0; lead < n; ++lead) {
    Vec<ModInt> v(n, fld.zero());
    v[lead] = fld.one();
    const std::size_t tail = n - lead - 1;
    std::vector<std::uint32_t> digits(tail, 0);
    for (;;) {
      visit(v);
      std::size_t pos = 0;
      while (pos < tail && digits[pos] == p - 1) {
        digits[pos] = 0;
        v[n - 1 - pos] = fld.zero();
        ++pos;
      }
      if (pos == tail) break;
      ++digits[pos];
      v[n - 1 - pos] = fld.element(digits[pos]);
    }
  }
}

enum class IdealSide { left, right };
enum class CensusModeKind { full, principal, sample };

struct CensusMode {
  CensusModeKind kind = CensusModeKind::full;
  std::uint64_t sample_size = 0;
  std::uint64_t seed = 0;
};

inline std::string side_name(IdealSide s) { return s == IdealSide::left ? "left" : "right"; }
inline std::string mode_name(CensusModeKind m) {
  switch (m) {
    case CensusModeKind::full: return "full";
    case CensusModeKind::principal: return "principal";
    case CensusModeKind::sample: return "sample";
  }
  return "?";
}

struct CensusIdeal {
  std::vector<std::vector<std::uint32_t>> basis;
  std::size_t dim = 0;
  std::string label;
  /// Principal modes: how many enumerated generators produced this ideal.
  std::uint64_t generators = 0;
};

struct IdealCensusReport {
  std::string algebra;
  std::string field;
  std::string side;
  std::string mode;
  bool sampled = false;
  /// Subspaces (full mode) or generators (principal modes) examined.
  std::uint64_t examined = 0;
  /// Elements accounted for, counting scalar multiples of each generator.
  std::uint64_t elements_covered = 0;
  std::vector<CensusIdeal> ideals;
  std::vector<std::string> discrepancies;
  std::vector<std::string> notes;

  std::size_t nontrivial_count() const {
    std::size_t c = 0;
    for (const auto& i : ideals) c += (i.label == "Trivial_Zero" || i.label == "Trivial_Full") ? 0 : 1;
    return c;
  }
};

namespace detail {

inline std::vector<std::vector<std::uint32_t>> raw_basis(const Subspace<ModInt>& s) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    std::vector<std::uint32_t> row;
    for (const auto& x : s.basis().row(r)) row.push_back(x.value());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string describe(const Subspace<ModInt>& s) {
  std::string out = "<";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    out += r ? "; " : "";
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) out += (c ? "," : "") + std::to_string(s.basis()(r, c).value());
  }
  return out + ">";
}

inline IdealTag annihilator_tag(AlgebraTag alg) {
  switch (alg) {
    case AlgebraTag::w2: return IdealTag::Annl_W2;
    case AlgebraTag::w2_comm: return IdealTag::Annl_W2x2;
    case AlgebraTag::s2: return IdealTag::Annl_S2;
  }
  return IdealTag::Annl_W2;
}

/// Every left ideal named by the classification, over GF(p).
inline std::vector<Subspace<ModInt>> classified_left_ideals(const PrimeField& fld, AlgebraTag alg) {
  using Family = IdealFamily<ModInt>;
  std::vector<Family> fams{make_family<ModInt>(IdealTag::Trivial_Zero, alg),
                           make_family<ModInt>(IdealTag::Trivial_Full, alg)};
  if (alg == AlgebraTag::w2_comm) {
    fams.push_back(make_family<ModInt>(IdealTag::W2_4dim));
    fams.push_back(make_family<ModInt>(IdealTag::W2_2dim));
  } else if (alg == AlgebraTag::w2) {
    fams.push_back(make_family<ModInt>(IdealTag::I1));
    fams.push_back(make_family<ModInt>(IdealTag::I2));
    std::vector<std::pair<ModInt, ModInt>> line{{fld.zero(), fld.one()}};
    for (std::uint32_t b = 0; b < fld.p(); ++b) line.emplace_back(fld.one(), fld.element(b));
    for (const auto& [a, b] : line) {
      fams.push_back(make_family(IdealTag::W_ab, a, b));
      fams.push_back(make_family(IdealTag::w_ab, a, b));
    }
  }
  std::vector<Subspace<ModInt>> out;
  for (const auto& f : fams) out.push_back(family_subspace(fld, f));
  return out;
}

}  // namespace detail

/// Runs one census. Full mode needs ambient dimension <= 6.
inline IdealCensusReport ideal_census_gfp(AlgebraTag alg, std::uint32_t p, IdealSide side, const CensusMode& mode) {
  const PrimeField fld(p);
  const auto algebra = algebra_by_tag(fld, alg);
  const std::size_t n = algebra.dim();
  const MultiplicationOperators<ModInt> ops(algebra, fld.one());
  const auto annl = left_annihilator(algebra, fld.one());

  IdealCensusReport rep;
  rep.algebra = tag_name(alg);
  rep.field = fld.name();
  rep.side = side_name(side);
  rep.mode = mode_name(mode.kind);
  rep.sampled = mode.kind == CensusModeKind::sample;
  rep.notes.push_back("classification is proved over fields of characteristic 0; findings outside it are reported as "
                      "discrepancies (possible characteristic artifacts)");

  auto label_of = [&](const Subspace<ModInt>& s) -> std::optional<std::string> {
    if (side == IdealSide::left) {
      const auto f = classify_left_ideal(fld, alg, s, &ops);
      if (!f) return std::nullopt;
      return f->label();
    }
    if (s.is_zero()) return std::string("Trivial_Zero");
    if (s.is_full()) return std::string("Trivial_Full");
    if (!s.is_subspace_of(annl)) return std::nullopt;
    const auto tag = ideal_tag_name(detail::annihilator_tag(alg));
    return s == annl ? tag : "subspace of " + tag;
  };

  std::map<Subspace<ModInt>, std::uint64_t> found;
  auto record_all = [&] {
    for (const auto& [s, count] : found) {
      const auto label = label_of(s);
      rep.ideals.push_back({detail::raw_basis(s), s.dim(), label ? *label : "UNCLASSIFIED", count});
      if (!label) {
        rep.discrepancies.push_back(side_name(side) + " ideal " + detail::describe(s) +
                                    " is outside the classified families (possible characteristic artifact)");
      }
    }
  };

  if (mode.kind == CensusModeKind::full) {
    if (n > kMaxFullEnumerationDim) {
      throw std::invalid_argument("full census of " + tag_name(alg) + " would enumerate " + subspace_count(n, p).str() +
                                  " subspaces; use principal or sample mode");
    }
    enumerate_subspaces(p, n, std::nullopt, [&](const Subspace<ModInt>& s) {
      ++rep.examined;
      const bool ideal = side == IdealSide::left ? ops.is_left_ideal(s) : ops.is_right_ideal(s);
      if (ideal) found.emplace(s, 0);
    });
    rep.elements_covered = rep.examined;
    record_all();
    if (side == IdealSide::right) {
      // Every subspace of Ann_l is a right ideal, so the count is forced.
      const Integer expected = subspace_count(annl.dim(), p) + (annl.is_full() ? 0 : 1);
      if (Integer(found.size()) != expected) {
        rep.discrepancies.push_back("right ideal count " + std::to_string(found.size()) + " differs from " +
                                    expected.str() + " = subspaces of Ann_l plus the whole algebra");
      }
    }
    return rep;
  }

  auto closure = [&](const Vec<ModInt>& x) {
    return side == IdealSide::left ? ops.left_closure(x) : ops.right_closure(x);
  };
  auto check_right_principal = [&](const Vec<ModInt>& x, const Subspace<ModInt>& s) {
    // In W(2), W_2 and S_2 a right ideal generated by x is span{x} on Ann_l
    // and the whole algebra elsewhere.
    const bool in_annl = annl.contains(x);
    const bool ok = in_annl ? s.dim() == 1 : s.is_full();
    if (!ok) {
      rep.discrepancies.push_back("principal right ideal of " + detail::describe(Subspace<ModInt>::span(n, std::vector<Vec<ModInt>>{x})) +
                                  " has dimension " + std::to_string(s.dim()));
    }
  };

  if (mode.kind == CensusModeKind::principal) {
    enumerate_projective_points(p, n, [&](const Vec<ModInt>& x) {
      ++rep.examined;
      const auto s = closure(x);
      if (side == IdealSide::right) check_right_principal(x, s);
      ++found[s];
    });
    rep.elements_covered = rep.examined * (p - 1) + 1;
    ++found[Subspace<ModInt>::zero(n)];
  } else {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::uint32_t> digit(0, p - 1);
    for (std::uint64_t i = 0; i < mode.sample_size; ++i) {
      Vec<ModInt> x(n);
      for (auto& c : x) c = fld.element(digit(rng));
      ++rep.examined;
      const auto s = closure(x);
      if (side == IdealSide::right && !is_zero_vector(x)) check_right_principal(x, s);
      ++found[s];
    }
    rep.elements_covered = rep.examined;
  }
  record_all();

  if (side == IdealSide::left) {
    // Every left ideal is a sum of principal ones. If the classified list is
    // closed under sums, principal coverage therefore covers all left ideals.
    const auto listed = detail::classified_left_ideals(fld, alg);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < listed.size(); ++i)
      for (std::size_t j = i; j < listed.size(); ++j) {
        const auto sum = subspace_sum(listed[i], listed[j]);
        if (!ops.is_left_ideal(sum) || !classify_left_ideal(fld, alg, sum, &ops)) ++bad;
      }
    if (bad) {
      rep.discrepancies.push_back(std::to_string(bad) + " sums of classified left ideals fall outside the classification");
    } else {
      rep.notes.push_back("the " + std::to_string(listed.size()) +
                          " classified left ideals (trivial ones included) are closed under sums");
    }
  }
  return rep;
}

}  // namespace kantor
