#include <cocal/matrix.hpp>
#include <cocal/polynomial.hpp>
#include <cocal/random.hpp>
#include <cocal/roots.hpp>
#include <cocal/scalar.hpp>
#include <cocal/smith.hpp>

#include <gtest/gtest.h>

using namespace cocal;

namespace {

Matrix zero(std::size_t n) { return Matrix(n, n); }

// monic polynomial with the given roots
Polynomial from_roots(const std::vector<Scalar>& rs) {
  Polynomial p = Polynomial::constant(1);
  for (const auto& r : rs) p = p * Polynomial::linear(r);
  return p;
}

}  // namespace

TEST(Scalar, TextRoundTrip) {
  EXPECT_EQ(Scalar::frac(-6, 4).str(), "-3/2");
  EXPECT_EQ(Scalar(3).str(), "3/1");
  Scalar g(mpq_class(1, 2), mpq_class(-3, 4));
  EXPECT_EQ(g.str(), "1/2-3/4*i");
  EXPECT_EQ(parse_scalar("1/2+-3/4*i"), g);
  EXPECT_EQ(parse_scalar(g.str()), g);
  EXPECT_EQ(parse_scalar("-5/10"), Scalar::frac(-1, 2));
  EXPECT_EQ(parse_scalar("0/1+1/1*i"), Scalar::i());
  EXPECT_THROW(parse_scalar("1/0"), std::invalid_argument);
}

TEST(Scalar, FieldOps) {
  Scalar z(mpq_class(3), mpq_class(4));
  EXPECT_EQ(z * z.inverse(), Scalar(1));
  EXPECT_EQ(z.norm(), 25);
  auto s = gaussian_sqrt(Scalar(mpq_class(-7), mpq_class(24)));  // (3+4i)^2
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(*s * *s, Scalar(mpq_class(-7), mpq_class(24)));
  EXPECT_FALSE(gaussian_sqrt(Scalar(2)).has_value());
  EXPECT_TRUE(gaussian_sqrt(Scalar(-4)).has_value());
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(zero(6)), 0u);
  EXPECT_EQ(rank(Matrix::identity(6)), 6u);
  EXPECT_EQ(rank(Matrix::jordan_block(6, 0)), 5u);
}

TEST(Kernel, Examples) {
  EXPECT_TRUE(kernel_basis(Matrix::identity(4)).empty());
  auto k = kernel_basis(zero(3));
  ASSERT_EQ(k.size(), 3u);
  EXPECT_EQ(rank(Matrix::from_rows(k)), 3u);
  auto j = kernel_basis(Matrix::jordan_block(2, 0));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_FALSE(j[0][0].is_zero());
  EXPECT_TRUE(j[0][1].is_zero());
}

TEST(InvariantFactors, Examples) {
  auto id = invariant_factors(Matrix::identity(2));
  ASSERT_EQ(id.size(), 2u);
  EXPECT_EQ(id[0], Polynomial::linear(1));
  EXPECT_EQ(id[1], Polynomial::linear(1));

  auto j2 = invariant_factors(Matrix::jordan_block(2, 0));
  ASSERT_EQ(j2.size(), 1u);
  EXPECT_EQ(j2[0], Polynomial({0, 0, 1}));

  auto d = invariant_factors(Matrix::diagonal({1, 2}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], from_roots({1, 2}));
}

TEST(Similar, Examples) {
  Matrix j = Matrix::jordan_block(2, 0);
  EXPECT_TRUE(similar(j, j.transpose()));
  EXPECT_TRUE(similar(Matrix::diagonal({1, 2}), Matrix::diagonal({2, 1})));
  EXPECT_FALSE(similar(zero(2), j));
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(Matrix::identity(7)), (Signature{7, 0, 0}));
  EXPECT_EQ(signature(Matrix::diagonal({-1, -1, -1, -1, 1, 1, 1})), (Signature{3, 4, 0}));
  EXPECT_EQ(signature(zero(5)), (Signature{0, 0, 5}));
  // hyperbolic plane has zero diagonal
  EXPECT_EQ(signature(Matrix{{0, 1}, {1, 0}}), (Signature{1, 1, 0}));
  EXPECT_THROW(signature(Matrix::jordan_block(2, 0)), std::invalid_argument);
}

TEST(Roots, Examples) {
  auto r = roots(from_roots({1, 2}));
  ASSERT_TRUE(r.exact);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(*r.roots[0].exact, Scalar(1));
  EXPECT_EQ(*r.roots[1].exact, Scalar(2));

  auto c = roots(Polynomial({1, 0, 1}));
  ASSERT_TRUE(c.exact);
  ASSERT_EQ(c.roots.size(), 2u);
  for (const auto& x : c.roots) EXPECT_EQ(*x.exact * *x.exact, Scalar(-1));

  // oracle: expand (x-2)^4 (x+2)^2 by repeated multiplication
  Polynomial p = power(Polynomial::linear(2), 4) * power(Polynomial::linear(-2), 2);
  EXPECT_EQ(p.degree(), 6);
  auto m = roots(p);
  ASSERT_TRUE(m.exact);
  ASSERT_EQ(m.roots.size(), 2u);
  EXPECT_EQ(*m.roots[0].exact, Scalar(-2));
  EXPECT_EQ(m.roots[0].multiplicity, 2u);
  EXPECT_EQ(*m.roots[1].exact, Scalar(2));
  EXPECT_EQ(m.roots[1].multiplicity, 4u);
}

TEST(Roots, NumericFallback) {
  // (x^2 - 2)^3 does not split over Q(i)
  auto r = roots(power(Polynomial({-2, 0, 1}), 3));
  EXPECT_FALSE(r.exact);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(r.total_multiplicity(), 6u);
  EXPECT_NEAR(std::abs(r.roots[0].approx.real()), std::sqrt(2.0), 1e-9);
}

TEST(LinalgProperties, InvariantFactorProductIsCharPoly) {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t n = 2 + rng.index(5);
    Matrix m = rng.int_matrix(n, n, -2, 2);
    if (t % 3 == 0) m = Matrix::block_diagonal({Matrix::jordan_block(2, 1), rng.int_matrix(n - 1, n - 1, -1, 1)});
    Polynomial prod = Polynomial::constant(1);
    for (const auto& f : invariant_factors(m)) prod = prod * f;
    EXPECT_EQ(prod, char_poly(m));
  }
}

TEST(LinalgProperties, SimilarUnderConjugation) {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    Matrix m = rng.int_matrix(4, 4, -2, 2);
    Matrix p = rng.invertible(4);
    EXPECT_TRUE(similar(m, p * m * *inverse(p)));
  }
}

TEST(LinalgProperties, SignatureUnderCongruence) {
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    Matrix a = rng.int_matrix(5, 5, -2, 2);
    Matrix s = a + a.transpose();
    Matrix p = rng.invertible(5);
    EXPECT_EQ(signature(s), signature(p.transpose() * s * p));
  }
}

TEST(LinalgProperties, RankNullity) {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng.index(6), c = 1 + rng.index(6);
    Matrix m = rng.int_matrix(r, c, -1, 1);
    auto k = kernel_basis(m);
    EXPECT_EQ(rank(m) + k.size(), c);
    for (const auto& v : k)
      for (const auto& x : m * v) EXPECT_TRUE(x.is_zero());
  }
}

TEST(LinalgProperties, ExactRootsVanish) {
  Rng rng(15);
  for (int t = 0; t < 60; ++t) {
    std::vector<Scalar> rs;
    std::size_t deg = 1 + rng.index(6);
    for (std::size_t k = 0; k < deg; ++k) rs.push_back(t % 2 ? rng.gaussian() : rng.rational(4, 2));
    Polynomial p = from_roots(rs);
    auto out = roots(p);
    ASSERT_TRUE(out.exact);
    EXPECT_EQ(out.total_multiplicity(), deg);
    for (const auto& r : out.roots) EXPECT_TRUE(p.eval(*r.exact).is_zero());
  }
}
