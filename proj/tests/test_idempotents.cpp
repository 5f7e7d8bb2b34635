#include "kantor/idempotents/census.hpp"
#include "kantor/idempotents/l_family.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kantor;

namespace {

const RationalField QQ;

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Vec<Rational> e(int k) { return unit_vector(8, static_cast<std::size_t>(k - 1), q(1)); }

Vec<Rational> combo(std::initializer_list<std::pair<int, Rational>> terms) {
  Vec<Rational> v(8);
  for (const auto& [k, c] : terms) v[static_cast<std::size_t>(k - 1)] += c;
  return v;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  return q(num(rng), den(rng));
}

Rational random_nonzero(std::mt19937_64& rng) {
  for (;;) {
    auto r = random_rational(rng);
    if (!is_zero(r)) return r;
  }
}

const Rational kW4Reps[] = {q(1), q(-1), q(2), q(-3), q(5), q(6), q(-10)};

IdempotentFamily<Rational> random_family(std::mt19937_64& rng) {
  const auto tag = kIdempotentTags[rng() % 4];
  if (tag == IdempotentTag::w4) return {tag, random_rational(rng), kW4Reps[rng() % 7]};
  return {tag, random_rational(rng), tag == IdempotentTag::w1 ? q(0) : random_rational(rng)};
}

bool is_square_mod(std::uint32_t s, std::uint32_t p) {
  for (std::uint32_t y = 1; y < p; ++y)
    if (y * y % p == s) return true;
  return false;
}

// Nonzero idempotents of W(2) over GF(p), counted straight from the printed
// table with integer arithmetic.
std::uint64_t brute_idempotent_count(std::uint32_t p) {
  const auto& table = w2_published_table();
  std::uint64_t total = 1;
  for (int i = 0; i < 8; ++i) total *= p;
  std::uint64_t count = 0;
  for (std::uint64_t code = 1; code < total; ++code) {
    std::int64_t x[8];
    auto c = code;
    for (auto& xi : x) xi = static_cast<std::int64_t>(c % p), c /= p;
    std::int64_t sq[8] = {};
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) {
        const auto cell = table[i][j];
        if (cell.index) sq[cell.index - 1] += cell.coef * x[i] * x[j];
      }
    bool idem = true;
    for (int k = 0; k < 8 && idem; ++k) idem = ((sq[k] - x[k]) % static_cast<std::int64_t>(p) + p) % p == 0;
    count += idem;
  }
  return count;
}

LAlgebra<Rational> random_l_member(std::mt19937_64& rng) {
  const LTag tags[] = {LTag::W1, LTag::W2, LTag::W3, LTag::W4};
  const auto tag = tags[rng() % 4];
  if (tag == LTag::W4) return {tag, random_rational(rng), kW4Reps[rng() % 7]};
  return {tag, random_rational(rng), tag == LTag::W1 ? q(0) : random_rational(rng)};
}

}  // namespace

TEST(Families, StatedElements) {
  EXPECT_EQ(family_element(QQ, {IdempotentTag::w2, q(0), q(0)}), scaled(e(1), q(-1)));
  EXPECT_EQ(family_element(QQ, {IdempotentTag::w1, q(0), q(0)}), combo({{1, q(-1)}, {2, q(1)}, {8, q(1)}}));
  const auto w1 = family_element_parametric(IdempotentTag::w1);
  for (int k : {3, 4, 6, 7}) EXPECT_TRUE(w1[static_cast<std::size_t>(k - 1)].is_zero());
  EXPECT_TRUE((w1[1] - MultiPoly(1)).is_zero());
  EXPECT_THROW(family_element(QQ, {IdempotentTag::w4, q(0), q(4)}), std::invalid_argument);
  EXPECT_THROW(family_element(QQ, {IdempotentTag::w4, q(0), q(0)}), std::invalid_argument);
  EXPECT_THROW(family_element(QQ, {IdempotentTag::w4, q(0), q(1, 2)}), std::invalid_argument);
}

TEST(Families, IdempotencyIsAPolynomialIdentity) {
  const auto w2 = w2_algebra(QQ);
  EXPECT_TRUE(is_idempotent(w2, scaled(e(1), q(-1))));
  EXPECT_FALSE(is_idempotent(w2, e(4)));
  for (auto tag : kIdempotentTags) EXPECT_TRUE(parametric_idempotent_check(tag)) << idempotent_tag_name(tag);
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_family(rng);
    EXPECT_TRUE(is_idempotent(w2, family_element(QQ, f))) << f.label();
  }
}

TEST(Families, Membership) {
  EXPECT_EQ(family_membership(QQ, scaled(e(1), q(-1))), std::optional(IdempotentFamily<Rational>{IdempotentTag::w2, q(0), q(0)}));
  EXPECT_EQ(family_membership(QQ, e(2)), std::nullopt);
  const IdempotentFamily<Rational> w3{IdempotentTag::w3, q(1), q(1)};
  EXPECT_EQ(family_membership(QQ, family_element(QQ, w3)), std::optional(w3));
  // w4 coordinates with a non-canonical q belong to no family.
  auto x = family_element(QQ, {IdempotentTag::w4, q(2), q(2)});
  x[3] = q(8);
  EXPECT_EQ(family_membership(QQ, x), std::nullopt);
}

TEST(SquareClass, RationalExamplesAndProperties) {
  const auto eight = square_class_rep(q(8));
  EXPECT_EQ(eight.rep, q(2));
  EXPECT_EQ(eight.b, q(1, 2));
  const auto minus4 = square_class_rep(q(-4));
  EXPECT_EQ(minus4.rep, q(-1));
  EXPECT_EQ(minus4.b, q(1, 2));
  EXPECT_THROW(square_class_rep(q(0)), std::invalid_argument);
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> num(-500, 500), den(1, 300);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational s = q(num(rng), den(rng));
    if (is_zero(s)) continue;
    const auto sc = square_class_rep(s);
    EXPECT_EQ(sc.b * sc.b * s, sc.rep);
    EXPECT_EQ(boost::multiprecision::denominator(sc.rep), 1);
    EXPECT_EQ(sc.rep < 0, s < 0);
    const Integer m = boost::multiprecision::abs(boost::multiprecision::numerator(sc.rep));
    for (Integer k = 2; k * k <= m; ++k) EXPECT_NE(m % (k * k), 0) << "rep " << sc.rep << " is not squarefree";
    EXPECT_TRUE(is_square_class_rep(sc.rep));
  }
}

TEST(SquareClass, PrimeFieldAgainstExhaustiveSquares) {
  const ModInt three(3, 5);
  EXPECT_EQ(square_class_rep(three).rep, ModInt(2, 5));
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u}) {
    std::uint32_t n0 = 2;
    while (is_square_mod(n0, p)) ++n0;
    for (std::uint32_t s = 1; s < p; ++s) {
      const auto sc = square_class_rep(ModInt(s, p));
      EXPECT_EQ(sc.rep.value(), is_square_mod(s, p) ? 1u : n0) << "s = " << s << " mod " << p;
      EXPECT_EQ(sc.b * sc.b * ModInt(s, p), sc.rep);
    }
  }
}

TEST(Canonicalize, StatedExamples) {
  const auto w1_5 = canonicalize_idempotent(QQ, family_element(QQ, {IdempotentTag::w1, q(5), q(0)}));
  EXPECT_EQ(w1_5.family, (IdempotentFamily<Rational>{IdempotentTag::w1, q(5), q(0)}));
  EXPECT_EQ(w1_5.transform, AffineParam<Rational>::identity(q(1)));

  const auto shifted = combo({{2, q(1)}, {3, q(-1)}, {4, q(-2)}, {7, q(1)}, {8, q(1)}});
  EXPECT_EQ(mat_vec(t_map(QQ, q(1)), family_element(QQ, {IdempotentTag::w1, q(0), q(0)})), shifted);
  const auto l = canonicalize_idempotent(QQ, shifted);
  EXPECT_EQ(l.family, (IdempotentFamily<Rational>{IdempotentTag::w1, q(0), q(0)}));
  EXPECT_EQ(l.transform, (AffineParam<Rational>{q(-1), q(1)}));

  const auto w4 = canonicalize_idempotent(QQ, combo({{1, q(-1)}, {8, q(-2)}, {4, q(8)}}));
  EXPECT_EQ(w4.family, (IdempotentFamily<Rational>{IdempotentTag::w4, q(0), q(2)}));
  EXPECT_EQ(w4.transform, (AffineParam<Rational>{q(0), q(1, 2)}));
  EXPECT_EQ(w4.case_id, "case3b'");
}

TEST(Canonicalize, RejectsBadInput) {
  EXPECT_THROW(canonicalize_idempotent(QQ, Vec<Rational>(8)), std::invalid_argument);
  EXPECT_THROW(canonicalize_idempotent(QQ, e(4)), std::invalid_argument);
  EXPECT_THROW(canonicalize_idempotent(QQ, Vec<Rational>(7)), std::invalid_argument);
}

TEST(Canonicalize, FixesEveryCanonicalElement) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto f = random_family(rng);
    const auto l = canonicalize_idempotent(QQ, family_element(QQ, f));
    EXPECT_EQ(l.family, f) << f.label();
  }
}

TEST(Canonicalize, LabelIsConstantOnOrbits) {
  std::mt19937_64 rng(24);
  const auto w2 = w2_algebra(QQ);
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_family(rng);
    const AffineParam<Rational> g{random_rational(rng), random_nonzero(rng)};
    const auto x = mat_vec(affine_map(QQ, g), family_element(QQ, f));
    const auto l = canonicalize_idempotent(QQ, x, &w2);
    EXPECT_EQ(l.family, f) << f.label() << " moved by " << to_string(g);
    EXPECT_EQ(mat_vec(affine_map(QQ, l.transform), x), family_element(QQ, f));
  }
}

TEST(Canonicalize, EveryCaseIsReached) {
  std::mt19937_64 rng(25);
  std::set<std::string> seen;
  for (int trial = 0; trial < 300; ++trial) {
    const auto f = random_family(rng);
    const AffineParam<Rational> g{random_rational(rng), random_nonzero(rng)};
    seen.insert(canonicalize_idempotent(QQ, mat_vec(affine_map(QQ, g), family_element(QQ, f))).case_id);
  }
  seen.insert(canonicalize_idempotent(QQ, family_element(QQ, {IdempotentTag::w2, q(1), q(3)})).case_id);
  EXPECT_EQ(seen, (std::set<std::string>{"case1", "case2", "case3a", "case3b", "case3b'"}));
}

TEST(DecideV1, Examples) {
  const auto w10 = from_e_coords(QQ, family_element(QQ, {IdempotentTag::w1, q(0), q(0)}));
  EXPECT_EQ(decide_v1_isomorphism(QQ, w10, w10), std::optional(AffineParam<Rational>::identity(q(1))));
  const auto shifted = from_e_coords(QQ, combo({{2, q(1)}, {3, q(-1)}, {4, q(-2)}, {7, q(1)}, {8, q(1)}}));
  EXPECT_EQ(decide_v1_isomorphism(QQ, w10, shifted), std::optional(AffineParam<Rational>{q(-1), q(1)}));
  const auto w11 = from_e_coords(QQ, family_element(QQ, {IdempotentTag::w1, q(1), q(0)}));
  EXPECT_EQ(decide_v1_isomorphism(QQ, w10, w11), std::nullopt);
  EXPECT_THROW(decide_v1_isomorphism(QQ, w10, from_e_coords(QQ, e(4))), std::invalid_argument);
}

TEST(DecideV1, ReturnedParameterMapsOneOntoTheOther) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = family_element(QQ, random_family(rng));
    const auto xa = mat_vec(affine_map(QQ, {random_rational(rng), random_nonzero(rng)}), x);
    const auto xb = mat_vec(affine_map(QQ, {random_rational(rng), random_nonzero(rng)}), x);
    const auto g = decide_v1_isomorphism(QQ, from_e_coords(QQ, xa), from_e_coords(QQ, xb));
    ASSERT_TRUE(g.has_value());
    EXPECT_EQ(mat_vec(affine_map(QQ, *g), xb), xa);
  }
}

TEST(LFamily, TablesAsStated) {
  const auto w1 = l_algebra(QQ, {LTag::W1, q(5), q(0)});
  const Vec<Rational> v1{q(1), q(0)}, v2{q(0), q(1)};
  EXPECT_EQ(eval_mul(w1, v1, v1), (Vec<Rational>{q(-1), q(1)}));
  EXPECT_EQ(eval_mul(w1, v1, v2), (Vec<Rational>{q(0), q(5)}));
  EXPECT_EQ(eval_mul(w1, v2, v1), (Vec<Rational>{q(0), q(0)}));
  EXPECT_EQ(eval_mul(w1, v2, v2), (Vec<Rational>{q(0), q(0)}));
  const auto w4 = l_algebra(QQ, {LTag::W4, q(1), q(-3)});
  EXPECT_EQ(eval_mul(w4, v2, v2), (Vec<Rational>{q(-3), q(0)}));
  EXPECT_EQ(p(to_e_coords(QQ, l_table(LTag::W4, q(1), q(-3), q(1))), 4), q(-3));
  EXPECT_THROW(l_algebra(QQ, {LTag::W4, q(1), q(4)}), std::invalid_argument);
}

TEST(LFamily, CorrespondenceFormulas) {
  for (auto tag : {LTag::W1, LTag::W2, LTag::W3, LTag::W4}) EXPECT_TRUE(l_correspondence_check_symbolic(tag));
  EXPECT_EQ(to_e_coords(QQ, l_table(LTag::W1, q(2), q(0), q(1))), combo({{1, q(-1)}, {2, q(1)}, {8, q(1)}}));
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 40; ++trial) EXPECT_TRUE(l_correspondence_check(QQ, random_l_member(rng)));
}

TEST(LFamily, MemberOfInvertsTheCorrespondence) {
  std::mt19937_64 rng(28);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_family(rng);
    const auto [member, extra] = l_member_of(QQ, f);
    const auto coords = to_e_coords(QQ, l_table(member.tag, member.t, member.s, q(1)));
    EXPECT_EQ(mat_vec(affine_map(QQ, extra), family_element(QQ, f)), coords) << f.label();
  }
}

TEST(QuasiUnitForm, FixedPointAndPermutedBasis) {
  const LAlgebra<Rational> w17{LTag::W1, q(7), q(0)};
  const auto alg = l_algebra(QQ, w17);
  const auto same = canonical_quasiunit_form(QQ, alg, Vec<Rational>{q(1), q(0)});
  EXPECT_EQ(same.member, w17);
  EXPECT_EQ(same.transform, AffineParam<Rational>::identity(q(1)));

  Matrix<Rational> swap(2, 2);
  swap(0, 1) = q(1), swap(1, 0) = q(1);
  const AlgebraDef<Rational> permuted(2, transport(swap, swap, BilMap<Rational>(2, alg.tensor())).flat(), {"v1", "v2"});
  const auto form = canonical_quasiunit_form(QQ, permuted, Vec<Rational>{q(0), q(1)});
  EXPECT_EQ(form.member, w17);
  EXPECT_NE(form.iso, (Matrix<Rational>::identity(2, q(1))));
  EXPECT_EQ(mat_vec(form.iso, Vec<Rational>{q(0), q(1)}), (Vec<Rational>{q(1), q(0)}));
}

TEST(QuasiUnitForm, UniqueMemberUnderRandomChangeOfBasis) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const auto member = random_l_member(rng);
    const auto alg = l_algebra(QQ, member);
    Matrix<Rational> f(2, 2);
    do {
      for (std::size_t i = 0; i < 4; ++i) f(i / 2, i % 2) = random_rational(rng);
    } while (is_zero(f(0, 0) * f(1, 1) - f(0, 1) * f(1, 0)));
    const auto finv = *inverse(f, q(1));
    const AlgebraDef<Rational> moved(2, transport(f, finv, BilMap<Rational>(2, alg.tensor())).flat(), {"x", "y"});
    const auto form = canonical_quasiunit_form(QQ, moved, f.column(0));
    EXPECT_EQ(form.member, member) << member.label();
    const auto target = l_table(form.member.tag, form.member.t, form.member.s, q(1));
    EXPECT_EQ(transport(form.iso, *inverse(form.iso, q(1)), BilMap<Rational>(2, moved.tensor())).flat(), target.flat());
  }
}

TEST(QuasiUnitForm, Errors) {
  EXPECT_THROW(canonical_quasiunit_form(QQ, AlgebraDef<Rational>::zero_algebra(2), Vec<Rational>{q(1), q(0)}),
               std::invalid_argument);
  const auto alg = l_algebra(QQ, {LTag::W1, q(7), q(0)});
  EXPECT_THROW(canonical_quasiunit_form(QQ, alg, Vec<Rational>{q(0), q(0)}), std::invalid_argument);
  // In W1(7), v2 v2 = 0, so v2 is not a left quasi-unit.
  EXPECT_THROW(canonical_quasiunit_form(QQ, alg, Vec<Rational>{q(0), q(1)}), std::invalid_argument);
}

TEST(IdempotentCensus, GF5AgainstIndependentCounts) {
  const auto rep = idempotent_census_gfp(5);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.elements_scanned, 390625u);
  EXPECT_EQ(rep.automorphisms, 20u);
  const std::uint64_t p = 5;
  const std::map<std::string, std::uint64_t> oracle{
      {"w1", p * p * (p - 1)}, {"w2", p * p * p}, {"w3", p * p * p * (p - 1)}, {"w4", p * p * (p - 1)}};
  EXPECT_EQ(rep.per_family_counts, oracle);
  EXPECT_EQ(rep.orbit_counts, oracle);
  EXPECT_EQ(rep.total_idempotents, brute_idempotent_count(5));
  EXPECT_EQ(rep.total_idempotents, 825u);
}

TEST(IdempotentCensus, RejectsOutOfRangePrimes) {
  EXPECT_THROW(idempotent_census_gfp(3), std::invalid_argument);
  EXPECT_THROW(idempotent_census_gfp(11), std::invalid_argument);
}
