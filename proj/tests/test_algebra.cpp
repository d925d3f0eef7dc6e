#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace propeq;

namespace {

IntMatrix random_int_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST(Smith, CertificateOnRandomMatrices) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = 1 + rng() % 5, c = 1 + rng() % 5;
    const IntMatrix a = random_int_matrix(rng, r, c, 6);
    const auto s = smith_normal_form<Integer>(a);
    EXPECT_EQ(s.u * a * s.v, s.diagonal);
    EXPECT_EQ(s.u * s.u_inv, IntMatrix::identity(r));
    EXPECT_EQ(s.v * s.v_inv, IntMatrix::identity(c));
    for (std::size_t i = 1; i < s.invariants.size(); ++i) EXPECT_EQ(s.invariants[i] % s.invariants[i - 1], 0);
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < r; ++i) {
      rows.emplace_back();
      for (std::size_t j = 0; j < c; ++j) rows.back().push_back(Rational(a(i, j)));
    }
    EXPECT_EQ(s.rank, oracle::rank(rows));
  }
}

TEST(Smith, HandComputedFixture) {
  // diag(2, 6) after row and column operations by hand: [[2,4],[6,6]] -> (2, 6)
  const IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 6}}, 2);
  const auto s = smith_normal_form<Integer>(a);
  ASSERT_EQ(s.invariants.size(), 2u);
  EXPECT_EQ(s.invariants[0], 2);
  EXPECT_EQ(s.invariants[1], 6);
}

TEST(Abelian, CohomologyOfSmallComplexes) {
  // Z --2--> Z : H^0 = 0, H^1 = Z/2
  IntegerCochainComplex c{{{0}, {0}}, {IntMatrix::from_rows({{2}}, 1)}};
  const auto h = cohomology(c);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_TRUE(h[0].is_zero());
  EXPECT_EQ(h[1].str(), "Z/2");

  // Z/4 --2--> Z/4 : kernel {0,2}, cokernel Z/2
  IntegerCochainComplex t{{{4}, {4}}, {IntMatrix::from_rows({{2}}, 1)}};
  const auto ht = cohomology(t);
  EXPECT_EQ(ht[0].str(), "Z/2");
  EXPECT_EQ(ht[1].str(), "Z/2");
}

TEST(Abelian, WellDefinedness) {
  // Z/2 -> Z/4 by 2 is fine, by 1 is not
  EXPECT_TRUE(abelian::is_well_defined({2}, {4}, IntMatrix::from_rows({{2}}, 1)));
  EXPECT_FALSE(abelian::is_well_defined({2}, {4}, IntMatrix::from_rows({{1}}, 1)));
}

TEST(Laurent, Arithmetic) {
  const auto t = LaurentPolynomial::t();
  const LaurentPolynomial one(1);
  const auto tinv = LaurentPolynomial::monomial(1, -1);
  EXPECT_EQ(t * tinv, one);
  EXPECT_EQ((t - one) * (t + one), t * t - one);
  EXPECT_EQ((t - one).str(), "t - 1");
  EXPECT_EQ((tinv * 2 + LaurentPolynomial(Rational(1, 2))).str(), "1/2 + 2t^-1");
  EXPECT_EQ((t * t - one).span(), 2);
  EXPECT_TRUE(tinv.is_unit());
}

TEST(Laurent, DivisionAndGcd) {
  using Tr = EuclideanTraits<LaurentPolynomial>;
  const auto t = LaurentPolynomial::t();
  const LaurentPolynomial one(1);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPolynomial a, b;
    for (int e = -2; e <= 3; ++e) a += LaurentPolynomial::monomial(oracle::random_rational(rng), e);
    for (int e = -1; e <= 1; ++e) b += LaurentPolynomial::monomial(oracle::random_rational(rng), e);
    if (b.is_zero()) continue;
    const auto [q, r] = Tr::divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(Tr::size(r), std::max<std::int64_t>(Tr::size(b), 1) + (r.is_zero() ? 1 : 0));
  }
  // gcd((t-1)(t+1) t^-3, (t-1)^2) = t - 1
  const auto g = gcd((t - one) * (t + one) * LaurentPolynomial::monomial(1, -3), (t - one) * (t - one));
  EXPECT_EQ(g, t - one);
  EXPECT_TRUE(gcd(t - one, t + one).is_unit());
}

TEST(Laurent, SmithOverLaurentRing) {
  const auto t = LaurentPolynomial::t();
  const LaurentPolynomial one(1);
  // Jordan block: t - A with A = [[1,1],[0,1]] has invariants (1, (t-1)^2)
  RatMatrix a = RatMatrix::from_rows({{1, 1}, {0, 1}}, 2);
  const auto d = decompose(LaurentModule::from_endomorphism(a));
  EXPECT_EQ(d.free_rank, 0u);
  ASSERT_EQ(d.torsion.size(), 1u);
  EXPECT_EQ(d.torsion[0], (t - one) * (t - one));
  EXPECT_EQ(d.dimension(), std::optional<std::size_t>(2));
}
