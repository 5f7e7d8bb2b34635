#include "kantor/exactmath/field.hpp"
#include "kantor/exactmath/multipoly.hpp"
#include "kantor/exactmath/subspace.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kantor;

namespace {

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

Matrix<Rational> random_rational_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), sparse(0, 2);
  Matrix<Rational> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = sparse(rng) == 0 ? q(0) : q(num(rng), den(rng));
  return m;
}

Matrix<ModInt> random_mod_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t p) {
  std::uniform_int_distribution<std::uint32_t> v(0, p - 1);
  Matrix<ModInt> m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = ModInt(v(rng), p);
  return m;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(to_string(parse_rational("6/-4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("-0")), "0");
  EXPECT_EQ(to_string(parse_rational("12")), "12");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1.5"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(ModInt, ArithmeticAgainstIntegers) {
  for (std::int64_t a = -12; a <= 12; ++a)
    for (std::int64_t b = -12; b <= 12; ++b) {
      const ModInt x(a, 7), y(b, 7);
      EXPECT_EQ((x + y).value(), static_cast<std::uint32_t>(((a + b) % 7 + 7) % 7));
      EXPECT_EQ((x - y).value(), static_cast<std::uint32_t>(((a - b) % 7 + 7) % 7));
      EXPECT_EQ((x * y).value(), static_cast<std::uint32_t>(((a * b) % 7 + 7) % 7));
      if (!y.is_zero()) {
        EXPECT_EQ((x / y) * y, x);
      }
    }
}

TEST(ModInt, UnboundZeroAdoptsModulus) {
  ModInt z;
  z += ModInt(3, 5);
  EXPECT_EQ(z.modulus(), 5u);
  EXPECT_EQ(z.value(), 3u);
  EXPECT_EQ(ModInt() - ModInt(1, 5), ModInt(4, 5));
}

TEST(ModInt, DivisionByZeroThrows) { EXPECT_THROW(ModInt(1, 5) / ModInt(0, 5), std::domain_error); }

TEST(ModInt, QuadraticResiduesMatchBruteForce) {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u, 101u}) {
    std::vector<bool> square(p, false);
    for (std::uint32_t x = 1; x < p; ++x) square[x * x % p] = true;
    std::uint32_t first_non = 0;
    for (std::uint32_t a = 1; a < p; ++a) {
      EXPECT_EQ(is_quadratic_residue(ModInt(a, p)), square[a]) << a << " mod " << p;
      if (!square[a] && first_non == 0) first_non = a;
      if (square[a]) {
        const ModInt r = sqrt_mod(ModInt(a, p));
        EXPECT_EQ(r * r, ModInt(a, p));
        EXPECT_LE(r.value(), p - r.value());
      } else {
        EXPECT_THROW(sqrt_mod(ModInt(a, p)), std::domain_error);
      }
    }
    EXPECT_EQ(smallest_nonresidue(p).value(), first_non);
  }
}

TEST(Field, SpecParsing) {
  EXPECT_TRUE(FieldSpec::parse("Q").is_rational());
  EXPECT_EQ(FieldSpec::parse("gf5").p, 5u);
  EXPECT_EQ(FieldSpec::parse("GF(7)").p, 7u);
  EXPECT_EQ(FieldSpec::parse("gf101").name(), "GF(101)");
  EXPECT_THROW(FieldSpec::parse("gf3"), std::invalid_argument);
  EXPECT_THROW(FieldSpec::parse("gf2"), std::invalid_argument);
  EXPECT_THROW(FieldSpec::parse("gf9"), std::invalid_argument);
  EXPECT_THROW(FieldSpec::parse("R"), std::invalid_argument);
}

TEST(Field, RationalReduction) {
  const PrimeField f(5);
  EXPECT_EQ(f.from_rational(q(1, 3)), ModInt(2, 5));
  EXPECT_EQ(f.parse("-7/2"), ModInt(-7, 5) / ModInt(2, 5));
  EXPECT_THROW(f.from_rational(q(1, 10)), std::domain_error);
}

TEST(Matrix, RrefKnownExample) {
  const auto m = Matrix<Rational>::from_rows({{q(1), q(2), q(3)}, {q(2), q(4), q(7)}, {q(1), q(2), q(4)}}, 3);
  const auto red = rref(m);
  EXPECT_EQ(red.pivots, (std::vector<std::size_t>{0, 2}));
  const auto expected = Matrix<Rational>::from_rows({{q(1), q(2), q(0)}, {q(0), q(0), q(1)}, {q(0), q(0), q(0)}}, 3);
  EXPECT_EQ(red.form, expected);
}

TEST(Matrix, InverseAndSingular) {
  const auto m = Matrix<Rational>::from_rows({{q(2), q(1)}, {q(1), q(1)}}, 2);
  const auto inv = inverse(m, q(1));
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, Matrix<Rational>::identity(2, q(1)));
  EXPECT_FALSE(inverse(Matrix<Rational>::from_rows({{q(1), q(2)}, {q(2), q(4)}}, 2), q(1)));
}

TEST(Matrix, SolveLinear) {
  const auto a = Matrix<Rational>::from_rows({{q(1), q(1), q(0)}, {q(0), q(1), q(1)}}, 3);
  const auto sol = solve_linear(a, Vec<Rational>{q(3), q(5)}, q(1));
  ASSERT_TRUE(sol);
  EXPECT_EQ(mat_vec(a, sol->particular), (Vec<Rational>{q(3), q(5)}));
  EXPECT_EQ(sol->kernel.dim(), 1u);
  const auto bad = Matrix<Rational>::from_rows({{q(1), q(1)}, {q(2), q(2)}}, 2);
  EXPECT_FALSE(solve_linear(bad, Vec<Rational>{q(1), q(3)}, q(1)));
}

TEST(MatrixProperty, RrefIsIdempotentAndRankNullityHolds) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    const std::size_t r = dim(rng), c = dim(rng);
    const auto m = random_rational_matrix(rng, r, c);
    const auto red = rref(m);
    EXPECT_EQ(rref(red.form).form, red.form);
    const auto ker = kernel_basis(m, q(1));
    EXPECT_EQ(red.rank() + ker.size(), c);
    for (const auto& v : ker) EXPECT_TRUE(is_zero_vector(mat_vec(m, v)));
    EXPECT_EQ(rank(m), rank(m.transposed()));
  }
}

TEST(MatrixProperty, InverseRoundTripModP) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_mod_matrix(rng, 4, 4, 7);
    const auto inv = inverse(m, ModInt(1, 7));
    EXPECT_EQ(inv.has_value(), rank(m) == 4);
    if (inv) {
      EXPECT_EQ(*inv * m, Matrix<ModInt>::identity(4, ModInt(1, 7)));
    }
  }
}

TEST(MatrixProperty, ZeroOneMatricesHaveSameRankOverQAndGF101) {
  // Minors of a 5x5 0/1 matrix are at most 5 in absolute value, so none
  // vanishes mod 101 unless it vanishes over Q.
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    Matrix<Rational> mq(5, 5);
    Matrix<ModInt> mp(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) {
        const int b = bit(rng);
        mq(i, j) = q(b);
        mp(i, j) = ModInt(b, 101);
      }
    EXPECT_EQ(rank(mq), rank(mp));
  }
}

TEST(SubspaceProperty, ModularLaw) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> rows(0, 4);
    const auto a = Subspace<Rational>::span(5, random_rational_matrix(rng, rows(rng), 5));
    const auto b = Subspace<Rational>::span(5, random_rational_matrix(rng, rows(rng), 5));
    const auto sum = subspace_sum(a, b);
    const auto meet = subspace_intersect(a, b, q(1));
    EXPECT_EQ(sum.dim() + meet.dim(), a.dim() + b.dim());
    EXPECT_TRUE(meet.is_subspace_of(a));
    EXPECT_TRUE(meet.is_subspace_of(b));
    EXPECT_TRUE(a.is_subspace_of(sum));
    EXPECT_EQ(Subspace<Rational>::span(5, a.basis()), a);
  }
}

TEST(SubspaceProperty, ModularLawModP) {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 300; ++trial) {
    std::uniform_int_distribution<std::size_t> rows(0, 4);
    const auto a = Subspace<ModInt>::span(5, random_mod_matrix(rng, rows(rng), 5, 5));
    const auto b = Subspace<ModInt>::span(5, random_mod_matrix(rng, rows(rng), 5, 5));
    const auto meet = subspace_intersect(a, b, ModInt(1, 5));
    EXPECT_EQ(subspace_sum(a, b).dim() + meet.dim(), a.dim() + b.dim());
    EXPECT_TRUE(meet.is_subspace_of(a));
    EXPECT_TRUE(meet.is_subspace_of(b));
  }
}

TEST(Subspace, CoordinatesReconstructVector) {
  const auto s = Subspace<Rational>::span(3, std::vector<Vec<Rational>>{{q(1), q(1), q(0)}, {q(0), q(1), q(1)}});
  const Vec<Rational> v{q(2), q(5), q(3)};
  ASSERT_TRUE(s.contains(v));
  const auto c = s.coordinates(v);
  Vec<Rational> back(3);
  for (std::size_t i = 0; i < s.dim(); ++i) add_scaled(back, s.basis().row(i), c[i]);
  EXPECT_EQ(back, v);
  EXPECT_FALSE(s.contains(Vec<Rational>{q(1), q(0), q(0)}));
}

TEST(MultiPoly, ArithmeticAndSubstitution) {
  const auto t = MultiPoly::variable("t");
  const auto s = MultiPoly::variable("s");
  const auto p = (t + s) * (t - s);
  EXPECT_EQ(p, t * t - s * s);
  EXPECT_EQ(p.substitute("s", t), MultiPoly(0));
  EXPECT_EQ(poly_eval(p, {{"t", q(3)}, {"s", q(1, 2)}}), q(35, 4));
  EXPECT_EQ((t * q(2)).to_string(), "2*t");
  EXPECT_THROW(poly_eval(p, {{"t", q(1)}}), std::invalid_argument);
}
