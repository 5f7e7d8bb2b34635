#pragma once

// Replays every result on W(2), W_2 and S_2 as a list of checks. Exact checks
// run over Q; oracle checks (censuses, automorphism groups) run over the
// requested GF(p). Check ids read <area>.<subject>[.<detail>].

#include "kantor/algebra/conservative.hpp"
#include "kantor/ideals/census.hpp"
#include "kantor/idempotents/census.hpp"
#include "kantor/idempotents/l_family.hpp"
#include "kantor/morphisms/automorphisms.hpp"
#include "kantor/replay/fixtures.hpp"
#include "kantor/replay/report.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>

namespace kantor {

enum class ReplayScope { table, ideals, automorphisms, idempotents, all };

inline ReplayScope parse_scope(std::string_view s) {
  if (s == "table") return ReplayScope::table;
  if (s == "ideals") return ReplayScope::ideals;
  if (s == "automorphisms") return ReplayScope::automorphisms;
  if (s == "idempotents") return ReplayScope::idempotents;
  if (s == "all") return ReplayScope::all;
  throw std::invalid_argument("unknown scope '" + std::string(s) + "' (expected table, ideals, automorphisms, idempotents or all)");
}

inline std::string scope_name(ReplayScope s) {
  switch (s) {
    case ReplayScope::table: return "table";
    case ReplayScope::ideals: return "ideals";
    case ReplayScope::automorphisms: return "automorphisms";
    case ReplayScope::idempotents: return "idempotents";
    case ReplayScope::all: return "all";
  }
  return "?";
}

struct ReplayOptions {
  FieldSpec field = FieldSpec::prime(5);
  ReplayScope scope = ReplayScope::all;
  /// Switches the large censuses to seeded sampling with this many draws.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = 0;
};

// Above these sizes a census needs --sample.
inline constexpr std::uint64_t kMaxFullCensusSubspaces = 100'000'000;
inline constexpr std::uint64_t kMaxPrincipalCensusGenerators = 2'000'000;

namespace detail {

inline std::string short_algebra_name(AlgebraTag t) {
  switch (t) {
    case AlgebraTag::w2: return "W2";
    case AlgebraTag::w2_comm: return "W2c";
    case AlgebraTag::s2: return "S2";
  }
  return "?";
}

inline constexpr AlgebraTag kAllAlgebras[] = {AlgebraTag::w2, AlgebraTag::w2_comm, AlgebraTag::s2};

struct RandomRationals {
  std::mt19937_64 rng;
  explicit RandomRationals(std::uint64_t seed) : rng(seed) {}

  Rational any() {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 6);
    const int n = num(rng);
    return Rational(n, den(rng));
  }
  Rational nonzero() {
    for (;;) {
      auto r = any();
      if (!is_zero(r)) return r;
    }
  }
  std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
};

inline std::string cell_text(const Vec<Rational>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (is_zero(v[k])) continue;
    s += (s.empty() ? "" : " + ") + ("(" + to_string(v[k]) + ")e" + std::to_string(k + 1));
  }
  return s.empty() ? "0" : s;
}

}  // namespace detail

/// One check per cell of the e-basis table of W(2), comparing the product
/// computed from the defining construction with `expected`.
inline ReplayReport cmd_table(const std::array<std::array<TableCell, 8>, 8>& expected = w2_published_table()) {
  const RationalField q;
  ReplayReport rep("table");
  const auto w2 = w2_algebra(q);
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      const auto got = eval_mul(w2, unit_vector(8, static_cast<std::size_t>(i - 1), q.one()),
                                unit_vector(8, static_cast<std::size_t>(j - 1), q.one()));
      Vec<Rational> want(8);
      const auto cell = expected[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
      if (cell.index) want[static_cast<std::size_t>(cell.index - 1)] = q.from_int(cell.coef);
      const std::string id = "table.e" + std::to_string(i) + "e" + std::to_string(j);
      rep.add(id, got == want,
              got == want ? detail::cell_text(got) : "expected " + detail::cell_text(want) + ", computed " + detail::cell_text(got));
    }
  return rep;
}

namespace detail {

inline void replay_conservativity(ReplayReport& rep) {
  const RationalField q;
  for (auto tag : kAllAlgebras) {
    const std::string id = "conservative." + short_algebra_name(tag);
    rep.run(id, [&] {
      const auto alg = algebra_by_tag(q, tag);
      const auto w = conservativity_witness(alg, q.one());
      if (!w) return rep.add(id, false, "no associated multiplication found");
      const auto residual = conservativity_residual(alg, w->f, q.one());
      rep.add(id, residual == 0, "failing basis quadruples: " + std::to_string(residual));
    });
  }
}

inline void replay_annihilators(ReplayReport& rep) {
  const RationalField q;
  const std::pair<AlgebraTag, std::size_t> dims[] = {{AlgebraTag::w2, 4}, {AlgebraTag::w2_comm, 2}, {AlgebraTag::s2, 1}};
  for (auto [tag, dim] : dims) {
    const auto alg = algebra_by_tag(q, tag);
    const auto annl = left_annihilator(alg, q.one());
    const auto stated = Subspace<Rational>::span(alg.dim(), annihilator_generators(q, tag));
    const std::string base = "annihilators." + short_algebra_name(tag);
    rep.add(base + ".dim", annl.dim() == dim, "dim " + std::to_string(annl.dim()) + ", stated " + std::to_string(dim));
    rep.add(base + ".span", annl == stated, annl == stated ? "equals the span of the stated generators" : "differs from the stated span");
    rep.add(base + ".right-ideal", is_right_ideal(alg, annl, q.one()));
  }
}

inline std::vector<IdealFamily<Rational>> sample_left_ideal_families(RandomRationals& rnd, int per_family) {
  std::vector<IdealFamily<Rational>> out{make_family<Rational>(IdealTag::I1), make_family<Rational>(IdealTag::I2),
                                         make_family<Rational>(IdealTag::W2_4dim), make_family<Rational>(IdealTag::W2_2dim)};
  for (int i = 0; i < per_family; ++i) {
    auto a = rnd.any(), b = rnd.any();
    if (is_zero(a) && is_zero(b)) b = Rational(1);
    out.push_back(make_family(IdealTag::W_ab, a, b));
    auto c = rnd.any(), d = rnd.any();
    if (is_zero(c) && is_zero(d)) c = Rational(1);
    out.push_back(make_family(IdealTag::w_ab, c, d));
  }
  return out;
}

inline void replay_exact_ideals(ReplayReport& rep, std::uint64_t seed) {
  const RationalField q;
  RandomRationals rnd(seed ^ 0x1dea1);
  std::size_t checked = 0, failed = 0;
  std::string first_failure;
  for (const auto& f : sample_left_ideal_families(rnd, 20)) {
    const auto alg = algebra_by_tag(q, f.algebra);
    ++checked;
    if (!is_left_ideal(alg, family_subspace(q, f), q.one())) {
      if (!failed++) first_failure = f.label();
    }
  }
  rep.add("ideals.left.families", failed == 0,
          std::to_string(checked) + " families checked" + (failed ? ", first failure " + first_failure : ""));

  // 30 classified left ideals: the four fixed ones and 13 of each parametric family.
  RandomRationals rnd2(seed ^ 0xc0b1e);
  auto families = sample_left_ideal_families(rnd2, 13);
  std::size_t ok = 0;
  std::string bad;
  for (const auto& f : families) {
    const auto y1 = family_subspace(q, f);
    const auto alg = algebra_by_tag(q, f.algebra);
    try {
      const auto y2 = complement_left_ideal(q, f.algebra, y1);
      const bool good = is_left_ideal(alg, y2, q.one()) && y1.dim() + y2.dim() == alg.dim() &&
                        subspace_intersect(y1, y2, q.one()).is_zero();
      if (good) ++ok;
      else if (bad.empty()) bad = f.label();
    } catch (const std::exception& e) {
      if (bad.empty()) bad = f.label() + " (" + e.what() + ")";
    }
  }
  rep.add("ideals.complement", ok == families.size(),
          std::to_string(ok) + " of " + std::to_string(families.size()) + " complements verified" +
              (bad.empty() ? "" : ", first failure " + bad));
}

inline void replay_ternary_corollary(ReplayReport& rep, std::uint64_t seed) {
  const RationalField q;
  RandomRationals rnd(seed ^ 0x7e7);
  for (auto tag : kAllAlgebras) {
    const auto alg = algebra_by_tag(q, tag);
    const std::size_t n = alg.dim();
    const auto tern = ternary_derivation_space(alg, q.one());
    const auto annl = left_annihilator(alg, q.one()).basis_vectors();
    int ok = 0;
    for (int trial = 0; trial < 10; ++trial) {
      Matrix<Rational> phi(n, n);
      for (std::size_t c = 0; c < n; ++c)
        for (const auto& a : annl) {
          const auto coeff = rnd.any();
          for (std::size_t r = 0; r < n; ++r) phi(r, c) += coeff * a[r];
        }
      const TernaryTriple<Rational> t(Matrix<Rational>(n, n), phi, Matrix<Rational>(n, n));
      ok += tern.contains(t.stacked()) && is_ternary_derivation(alg, t, q.one());
    }
    rep.add("ternary." + short_algebra_name(tag) + ".annihilator-maps", ok == 10,
            std::to_string(ok) + " of 10 maps (0, phi, 0) with phi(A) in Ann_l; ternary derivation space dim " +
                std::to_string(tern.dim()));
  }
}

inline void add_census_check(ReplayReport& rep, const std::string& id, const IdealCensusReport& r, bool expected_shape,
                             const std::string& shape_text) {
  std::size_t unclassified = 0;
  for (const auto& i : r.ideals) unclassified += i.label == "UNCLASSIFIED";
  std::string details = std::to_string(r.examined) + (r.mode == "full" ? " subspaces" : " generators") + ", " +
                        std::to_string(r.ideals.size()) + " distinct ideals, " + std::to_string(r.nontrivial_count()) +
                        " nontrivial; " + shape_text;
  if (r.sampled) rep.mark_sampled();
  if (!r.discrepancies.empty() || unclassified) {
    rep.add(id, CheckStatus::discrepancy, details + "; " + r.discrepancies.front());
    return;
  }
  rep.add(id, expected_shape, details);
}

inline void replay_ideal_censuses(ReplayReport& rep, std::uint32_t p, const ReplayOptions& opt) {
  const std::string fp = "gf" + std::to_string(p);
  auto mode_for_full = [&](std::size_t n) -> std::optional<CensusMode> {
    if (subspace_count(n, p) <= kMaxFullCensusSubspaces) return CensusMode{CensusModeKind::full, 0, 0};
    if (opt.sample) return CensusMode{CensusModeKind::sample, *opt.sample, opt.seed};
    return std::nullopt;
  };
  auto infeasible = [&](const std::string& id, const std::string& what) {
    rep.add(id, false, what + " over GF(" + std::to_string(p) + ") is too large for a full census; pass --sample N");
  };

  for (auto tag : {AlgebraTag::s2, AlgebraTag::w2_comm}) {
    const auto name = short_algebra_name(tag);
    const auto mode = mode_for_full(tag_dim(tag));
    for (auto side : {IdealSide::left, IdealSide::right}) {
      const std::string id = "census." + name + "." + side_name(side) + "." + fp;
      if (!mode) {
        infeasible(id, tag_name(tag));
        continue;
      }
      rep.run(id, [&] {
        const auto r = ideal_census_gfp(tag, p, side, *mode);
        std::set<std::string> labels;
        for (const auto& i : r.ideals)
          if (i.label != "Trivial_Zero" && i.label != "Trivial_Full") labels.insert(i.label);
        if (side == IdealSide::left && tag == AlgebraTag::s2) {
          add_census_check(rep, id, r, labels.empty(), "expected no nontrivial left ideal");
        } else if (side == IdealSide::left) {
          const bool exact = r.sampled ? labels.size() <= 2 : labels == std::set<std::string>{"W2_2dim", "W2_4dim"};
          add_census_check(rep, id, r, exact, "expected exactly <e1..e4> and <e5,e6>");
        } else {
          // Right ideals inside Ann_l are labelled after it; anything else is unclassified.
          add_census_check(rep, id, r, true, "every nontrivial right ideal lies in Ann_l");
        }
      });
    }
  }

  const std::uint64_t generators = (checked_power(p, 8, UINT64_MAX, "W(2) principal census") - 1) / (p - 1);
  std::optional<CensusMode> principal;
  if (opt.sample) principal = CensusMode{CensusModeKind::sample, *opt.sample, opt.seed};
  else if (generators <= kMaxPrincipalCensusGenerators) principal = CensusMode{CensusModeKind::principal, 0, 0};
  for (auto side : {IdealSide::left, IdealSide::right}) {
    const std::string id = "census.W2." + side_name(side) + "." + fp;
    if (!principal) {
      infeasible(id, "the W(2) principal census");
      continue;
    }
    rep.run(id, [&] {
      const auto r = ideal_census_gfp(AlgebraTag::w2, p, side, *principal);
      add_census_check(rep, id, r, true,
                       side == IdealSide::left ? "every principal left ideal is classified and the list is closed under sums"
                                               : "principal right ideals are lines of Ann_l or the whole algebra");
    });
  }
}

inline void replay_affine_identities(ReplayReport& rep, std::uint64_t seed) {
  const RationalField q;
  RandomRationals rnd(seed ^ 0xaff1e);
  const auto w2 = w2_algebra(q);
  const auto id8 = Matrix<Rational>::identity(8, q.one());
  const Vec<Rational> v1{q.one(), q.zero()};

  int aut = 0;
  for (int i = 0; i < 50; ++i) aut += is_algebra_automorphism(w2, affine_map(q, {rnd.any(), rnd.nonzero()}));
  rep.add("phi.automorphism", aut == 50, std::to_string(aut) + " of 50 random S_b T_a are automorphisms of W(2)");

  int closed = 0, comp = 0, additive = 0, multiplicative = 0, hom = 0, mono = 0;
  for (int i = 0; i < 20; ++i) {
    const auto a = rnd.any(), a2 = rnd.any(), b = rnd.nonzero(), b2 = rnd.nonzero();
    const auto ta = v2_matrix(AffineParam<Rational>{a, q.one()});
    const auto sb = v2_matrix(AffineParam<Rational>{q.zero(), b});
    closed += induced_automorphism_e(q, ta) == t_map(q, a) && induced_automorphism_e(q, sb) == s_map(q, b);
    comp += s_map(q, b) * t_map(q, a) == t_map(q, a * b) * s_map(q, b);
    additive += t_map(q, a) * t_map(q, a2) == t_map(q, a + a2);
    multiplicative += s_map(q, b) * s_map(q, b2) == s_map(q, b * b2);
    const auto f = v2_matrix(AffineParam<Rational>{a, b}), g = v2_matrix(AffineParam<Rational>{a2, b2});
    hom += induced_automorphism(q, f * g, v1) == induced_automorphism(q, f, v1) * induced_automorphism(q, g, v1);
    mono += f == Matrix<Rational>::identity(2, q.one()) || induced_automorphism(q, f, v1) != id8;
  }
  rep.add("phi.closed-forms", closed == 20, std::to_string(closed) + " of 20: t_map, s_map equal the induced maps");
  rep.add("phi.homomorphism", hom == 20, std::to_string(hom) + " of 20 pairs");
  rep.add("phi.monomorphism", mono == 20, std::to_string(mono) + " of 20 non-identity maps induce non-identity");
  rep.add("affine.conjugation", comp == 20, std::to_string(comp) + " of 20: S_b T_a = T_ab S_b");
  rep.add("affine.t-additive", additive == 20, std::to_string(additive) + " of 20: T_a T_a' = T_(a+a')");
  rep.add("affine.s-multiplicative", multiplicative == 20, std::to_string(multiplicative) + " of 20: S_b S_b' = S_bb'");

  const auto l8 = left_operator(w2, unit_vector(8, 7, q.one()));
  const int lambda[] = {0, 1, -1, -2, 0, -1, -1, 0};
  bool diagonal = true, scaling = true;
  for (std::size_t r = 0; r < 8; ++r)
    for (std::size_t c = 0; c < 8; ++c) diagonal = diagonal && l8(r, c) == (r == c ? q.from_int(lambda[r]) : q.zero());
  for (int i = 0; i < 5; ++i) {
    const auto b = rnd.nonzero();
    const auto s = s_map(q, b);
    for (std::size_t k = 0; k < 8; ++k) {
      Rational expected = q.one();
      for (int j = 0; j < std::abs(lambda[k]); ++j) expected *= lambda[k] < 0 ? b : q.one() / b;
      scaling = scaling && s(k, k) == expected;
    }
  }
  rep.add("remark.eigenvalues", diagonal && scaling,
          "L_e8 diagonal with eigenvalues (0,1,-1,-2,0,-1,-1,0) and S_b(e_k) = b^(-lambda_k) e_k");

  const auto l7 = left_operator(w2, unit_vector(8, 6, q.one()));
  int exp_ok = 0;
  for (int i = 0; i < 10; ++i) {
    const auto a = rnd.any();
    exp_ok += exp_nilpotent(scaled(l7, a), q.one()) == t_map(q, a);
  }
  rep.add("remark.exp-L_e7", exp_ok == 10, std::to_string(exp_ok) + " of 10: exp(a L_e7) = T_a");
}

inline void replay_derivations(ReplayReport& rep) {
  const RationalField q;
  const auto w2 = w2_algebra(q);
  const auto der = derivation_space(w2, q.one());
  const bool contains = der.contains(flatten(left_operator(w2, unit_vector(8, 6, q.one())))) &&
                        der.contains(flatten(left_operator(w2, unit_vector(8, 7, q.one()))));
  bool identity = true;
  for (const auto& v : der.basis_vectors()) identity = identity && is_derivation(w2, unflatten(v, 8), q.one());
  rep.add("derivations.W2.left-multiplications", contains, "L_e7, L_e8 in Der(W(2)); dim Der = " + std::to_string(der.dim()));
  rep.add("derivations.W2.identity", identity, "derivation identity on all basis pairs for every basis vector");
}

inline void replay_automorphism_groups(ReplayReport& rep, std::uint32_t p) {
  const PrimeField fld(p);
  for (auto tag : kAllAlgebras) {
    const std::string id = "aut." + short_algebra_name(tag) + ".gf" + std::to_string(p);
    rep.run(id, [&] {
      const auto group = automorphism_group_gfp(tag, p);
      std::vector<Matrix<ModInt>> expected;
      for (std::uint32_t a = 0; a < p; ++a)
        for (std::uint32_t b = 1; b < p; ++b) expected.push_back(affine_map(fld, {fld.element(a), fld.element(b)}, tag));
      std::sort(expected.begin(), expected.end(), detail::matrix_less);
      expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
      const bool shape = group == expected;
      const bool is_group = is_matrix_group(group, fld.one());
      rep.add(id, shape && is_group,
              "order " + std::to_string(group.size()) + ", expected " + std::to_string(expected.size()) + " = p(p-1); " +
                  (shape ? "every element is S_b T_a" : "elements differ from { S_b T_a }") +
                  (is_group ? "; closed under composition and inverse" : "; not a group"));
    });
  }
}

inline void replay_idempotent_theorem(ReplayReport& rep, std::uint64_t seed) {
  const RationalField q;
  RandomRationals rnd(seed ^ 0x1de);
  const auto w2 = w2_algebra(q);
  for (auto tag : kIdempotentTags)
    rep.add("idempotents.parametric." + idempotent_tag_name(tag), parametric_idempotent_check(tag),
            "w^2 - w vanishes as a polynomial vector");

  const Rational reps[] = {Rational(1), Rational(-1), Rational(2), Rational(-3), Rational(5), Rational(6), Rational(-10)};
  auto random_family = [&]() -> IdempotentFamily<Rational> {
    const auto tag = kIdempotentTags[rnd.index(4)];
    if (tag == IdempotentTag::w4) return {tag, rnd.any(), reps[rnd.index(7)]};
    return {tag, rnd.any(), tag == IdempotentTag::w1 ? Rational(0) : rnd.any()};
  };
  int round = 0, invariant = 0;
  std::string bad;
  for (int i = 0; i < 50; ++i) {
    const auto f = random_family();
    try {
      const auto l = canonicalize_idempotent(q, family_element(q, f), &w2);
      if (l.family == f && l.transform == AffineParam<Rational>::identity(q.one())) ++round;
      else if (bad.empty()) bad = f.label() + " -> " + l.family.label();
    } catch (const std::exception& e) {
      if (bad.empty()) bad = f.label() + ": " + e.what();
    }
  }
  rep.add("canonicalize.round-trip", round == 50, std::to_string(round) + " of 50" + (bad.empty() ? "" : ", first failure " + bad));
  bad.clear();
  for (int i = 0; i < 50; ++i) {
    const auto f = random_family();
    const AffineParam<Rational> g{rnd.any(), rnd.nonzero()};
    try {
      const auto x = mat_vec(affine_map(q, g), family_element(q, f));
      const auto l = canonicalize_idempotent(q, x, &w2);
      if (l.family == f && mat_vec(affine_map(q, l.transform), x) == family_element(q, f)) ++invariant;
      else if (bad.empty()) bad = f.label() + " moved by " + to_string(g) + " -> " + l.family.label();
    } catch (const std::exception& e) {
      if (bad.empty()) bad = f.label() + ": " + e.what();
    }
  }
  rep.add("canonicalize.orbit-invariance", invariant == 50,
          std::to_string(invariant) + " of 50" + (bad.empty() ? "" : ", first failure " + bad));

  // The three worked examples: a fixed point, a shifted w1(0), and a case 3b' element.
  const auto w10 = canonicalize_idempotent(q, family_element(q, {IdempotentTag::w1, Rational(5), Rational(0)}), &w2);
  Vec<Rational> shifted(8), w4x(8);
  shifted[1] = 1, shifted[2] = -1, shifted[3] = -2, shifted[6] = 1, shifted[7] = 1;
  w4x[0] = -1, w4x[7] = -2, w4x[3] = 8;
  const auto ls = canonicalize_idempotent(q, shifted, &w2);
  const auto l4 = canonicalize_idempotent(q, w4x, &w2);
  const bool examples = w10.family.label() == "w1(5)" && w10.transform == AffineParam<Rational>::identity(q.one()) &&
                        ls.family.label() == "w1(0)" && ls.transform == AffineParam<Rational>{Rational(-1), Rational(1)} &&
                        l4.family.label() == "w4(0,2)" && l4.transform == AffineParam<Rational>{Rational(0), Rational(1, 2)};
  rep.add("canonicalize.examples", examples,
          w10.family.label() + ", " + ls.family.label() + " via " + to_string(ls.transform) + ", " + l4.family.label() +
              " via " + to_string(l4.transform));
}

inline void replay_l_family(ReplayReport& rep, std::uint64_t seed) {
  const RationalField q;
  for (auto tag : {LTag::W1, LTag::W2, LTag::W3}) {
    rep.add("lfamily.correspondence." + l_tag_name(tag), l_correspondence_check_symbolic(tag),
            "polynomial identity in the table parameters");
  }
  RandomRationals rnd(seed ^ 0x14);
  const Rational reps[] = {Rational(1), Rational(-1), Rational(2), Rational(3), Rational(-2), Rational(7)};
  int w4 = 0;
  for (int i = 0; i < 10; ++i) w4 += l_correspondence_check(q, LAlgebra<Rational>{LTag::W4, rnd.any(), reps[rnd.index(6)]});
  rep.add("lfamily.correspondence.W4", w4 == 10, std::to_string(w4) + " of 10 sampled (t, u)");
  rep.add("lfamily.correspondence.W4-symbolic", l_correspondence_check_symbolic(LTag::W4),
          "polynomial identity in t and u");

  for (const auto& l : l_fixture_members()) {
    const std::string id = "lfamily.fixed-point." + fixture_stem(l);
    rep.run(id, [&] {
      const auto form = canonical_quasiunit_form(q, l_algebra(q, l), Vec<Rational>{q.one(), q.zero()});
      const bool ok = form.member == l && form.iso == Matrix<Rational>::identity(2, q.one());
      rep.add(id, ok, "canonical form " + form.member.label());
    });
  }
}

inline void replay_idempotent_census(ReplayReport& rep, std::uint32_t p, const ReplayOptions& opt) {
  const std::string id = "census.idempotents.gf" + std::to_string(p);
  if (!opt.sample && p > kMaxIdempotentCensusPrime) {
    rep.add(id, false, "a full scan of GF(" + std::to_string(p) + ")^8 is infeasible; pass --sample N");
    return;
  }
  rep.run(id, [&] {
    if (opt.sample) {
      // Sampled form: random canonical elements moved by random automorphisms
      // must canonicalize back to themselves.
      rep.mark_sampled();
      const PrimeField fld(p);
      const auto w2 = w2_algebra(fld);
      const auto members = all_family_members(fld);
      std::mt19937_64 rng(opt.seed);
      std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
      std::uniform_int_distribution<std::uint32_t> a(0, p - 1), b(1, p - 1);
      std::uint64_t ok = 0;
      for (std::uint64_t i = 0; i < *opt.sample; ++i) {
        const auto& f = members[pick(rng)];
        const AffineParam<ModInt> g{fld.element(a(rng)), fld.element(b(rng))};
        ok += canonicalize_idempotent(fld, mat_vec(affine_map(fld, g), family_element(fld, f)), &w2).family == f;
      }
      rep.add(id, ok == *opt.sample,
              std::to_string(ok) + " of " + std::to_string(*opt.sample) + " sampled orbit elements labelled correctly");
      return;
    }
    const auto r = idempotent_census_gfp(p);
    std::string counts;
    for (const auto& [k, v] : r.per_family_counts) counts += (counts.empty() ? "" : ", ") + k + " " + std::to_string(v);
    rep.add(id, r.ok(),
            std::to_string(r.total_idempotents) + " nonzero idempotents (" + counts + "); orbit enumeration " +
                (r.orbit_crosscheck_ok() ? "agrees" : "disagrees") + "; disjointness violations " +
                std::to_string(r.disjointness_violations) + "; invariance failures " +
                std::to_string(r.invariance_failures) + "; falsifications " + std::to_string(r.falsifications.size()));
  });
}

}  // namespace detail

inline ReplayReport cmd_verify_lemmas(const ReplayOptions& opt) {
  ReplayReport rep("verify-lemmas");
  rep.set_parameter("field", opt.field.name());
  rep.set_parameter("scope", scope_name(opt.scope));
  rep.set_parameter("seed", std::to_string(opt.seed));
  if (opt.sample) rep.set_parameter("sample", std::to_string(*opt.sample));
  const bool all = opt.scope == ReplayScope::all;
  const bool finite = !opt.field.is_rational();
  const std::uint32_t p = finite ? opt.field.p : 0;
  if (!finite) rep.add_note("field Q: exact checks only, no GF(p) oracles");

  if (all || opt.scope == ReplayScope::table) {
    for (const auto& c : cmd_table().checks()) rep.add(c.id, c.status, c.details);
    detail::replay_conservativity(rep);
  }
  if (all || opt.scope == ReplayScope::ideals) {
    detail::replay_annihilators(rep);
    rep.run("ideals.exact", [&] { detail::replay_exact_ideals(rep, opt.seed); });
    if (finite) detail::replay_ideal_censuses(rep, p, opt);
    rep.run("ternary", [&] { detail::replay_ternary_corollary(rep, opt.seed); });
  }
  if (all || opt.scope == ReplayScope::automorphisms) {
    rep.run("affine", [&] { detail::replay_affine_identities(rep, opt.seed); });
    rep.run("derivations", [&] { detail::replay_derivations(rep); });
    if (finite) detail::replay_automorphism_groups(rep, p);
  }
  if (all || opt.scope == ReplayScope::idempotents) {
    rep.run("idempotents", [&] { detail::replay_idempotent_theorem(rep, opt.seed); });
    rep.run("lfamily", [&] { detail::replay_l_family(rep, opt.seed); });
    if (finite) detail::replay_idempotent_census(rep, p, opt);
  }
  return rep;
}

}  // namespace kantor
