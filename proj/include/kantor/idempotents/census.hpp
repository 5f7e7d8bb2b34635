#pragma once

// Idempotent census of W(2) over GF(p). Two counts are compared:
//   scan:   all p^8 elements, idempotents canonicalized one by one;
//   orbits: every canonical family element pushed through the computed
//           automorphism group, orbits deduplicated.
// The scan also checks that each label is unchanged when an automorphism is
// applied first, and the orbit pass checks that no element is reached from
// two different family elements.

#include "kantor/idempotents/canonicalize.hpp"
#include "kantor/morphisms/automorphisms.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace kantor {

inline constexpr std::uint32_t kMaxIdempotentCensusPrime = 7;

struct IdempotentCensusReport {
  std::string field;
  std::uint64_t elements_scanned = 0;
  std::uint64_t total_idempotents = 0;  // nonzero ones
  std::map<std::string, std::uint64_t> per_family_counts;
  std::map<std::string, std::uint64_t> orbit_counts;
  std::uint64_t automorphisms = 0;
  std::uint64_t disjointness_violations = 0;
  std::uint64_t invariance_failures = 0;
  std::vector<std::string> falsifications;

  bool orbit_crosscheck_ok() const { return per_family_counts == orbit_counts; }
  bool ok() const {
    return orbit_crosscheck_ok() && disjointness_violations == 0 && invariance_failures == 0 && falsifications.empty();
  }
};

namespace detail {

inline std::uint64_t encode(const Vec<ModInt>& x, std::uint32_t p) {
  std::uint64_t code = 0;
  for (std::size_t i = x.size(); i-- > 0;) code = code * p + x[i].value();
  return code;
}

inline Vec<ModInt> decode(std::uint64_t code, std::uint32_t p, std::size_t n) {
  Vec<ModInt> x;
  for (std::size_t i = 0; i < n; ++i) {
    x.emplace_back(static_cast<std::int64_t>(code % p), p);
    code /= p;
  }
  return x;
}

/// Every member of the families with parameters in GF(p).
inline std::vector<IdempotentFamily<ModInt>> all_family_members(const PrimeField& fld) {
  std::vector<IdempotentFamily<ModInt>> out;
  const std::vector<ModInt> reps{fld.one(), smallest_nonresidue(fld.p())};
  for (std::uint32_t c = 0; c < fld.p(); ++c) {
    out.push_back({IdempotentTag::w1, fld.element(c), fld.zero()});
    for (std::uint32_t d = 0; d < fld.p(); ++d) {
      out.push_back({IdempotentTag::w2, fld.element(c), fld.element(d)});
      out.push_back({IdempotentTag::w3, fld.element(c), fld.element(d)});
    }
    for (const auto& q : reps) out.push_back({IdempotentTag::w4, fld.element(c), q});
  }
  return out;
}

}  // namespace detail

inline IdempotentCensusReport idempotent_census_gfp(std::uint32_t p) {
  if (p < 5) throw std::invalid_argument("idempotent census needs p >= 5 (the case analysis divides by 2 and 3)");
  if (p > kMaxIdempotentCensusPrime) {
    throw std::invalid_argument("idempotent census over GF(" + std::to_string(p) + ") would scan " + std::to_string(p) +
                                "^8 elements; the limit is p <= " + std::to_string(kMaxIdempotentCensusPrime));
  }
  const PrimeField fld(p);
  const auto w2 = w2_algebra(fld);
  const auto aut = automorphism_group_gfp(AlgebraTag::w2, p);
  IdempotentCensusReport rep;
  rep.field = fld.name();
  rep.automorphisms = aut.size();
  for (auto tag : kIdempotentTags) {
    rep.per_family_counts[idempotent_tag_name(tag)] = 0;
    rep.orbit_counts[idempotent_tag_name(tag)] = 0;
  }

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < kW2Dim; ++i) total *= p;
  rep.elements_scanned = total;
  for (std::uint64_t code = 1; code < total; ++code) {
    const auto x = detail::decode(code, p, kW2Dim);
    if (!is_idempotent(w2, x)) continue;
    ++rep.total_idempotents;
    try {
      const auto label = canonicalize_idempotent(fld, x, &w2);
      ++rep.per_family_counts[idempotent_tag_name(label.family.tag)];
      for (const auto& g : aut) {
        if (!(canonicalize_idempotent(fld, mat_vec(g, x), &w2).family == label.family)) ++rep.invariance_failures;
      }
    } catch (const FalsificationError& err) {
      rep.falsifications.push_back(err.what());
    }
  }

  std::map<std::uint64_t, std::string> owner;
  for (const auto& f : detail::all_family_members(fld)) {
    const auto w = family_element(fld, f);
    std::set<std::uint64_t> orbit;
    for (const auto& g : aut) orbit.insert(detail::encode(mat_vec(g, w), p));
    for (auto code : orbit) {
      const auto [it, fresh] = owner.emplace(code, f.label());
      if (!fresh) ++rep.disjointness_violations;
    }
    rep.orbit_counts[idempotent_tag_name(f.tag)] += orbit.size();
  }
  return rep;
}

}  // namespace kantor
