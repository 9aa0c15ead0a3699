#include <cocal/liealg.hpp>
#include <cocal/random.hpp>

#include <gtest/gtest.h>

using namespace cocal;

namespace {

Vector unit7(int i) {
  Vector v(7);
  v[static_cast<std::size_t>(i - 1)] = 1;
  return v;
}

LieAlgebra heisenberg_plus_abelian() {
  LieAlgebra g(7);
  g.set_bracket(0, 1, unit7(3));
  return g;
}

Multivector ef(std::vector<int> idx) { return Multivector::basis(7, idx, Variance::form); }

Multivector on_u(const Multivector& rho6) { return embed(rho6, 7, {1, 2, 3, 4, 5, 6}); }

// Random algebra with a codimension-one Abelian ideal in a scrambled basis.
LieAlgebra random_model(Rng& rng, Matrix* f_out = nullptr) {
  Matrix f = rng.int_matrix(6, 6, -2, 2);
  if (f_out) *f_out = f;
  return change_basis(from_matrix(f), rng.invertible(7, -1, 1));
}

}  // namespace

TEST(Validate, Examples) {
  EXPECT_TRUE(validate(LieAlgebra(7)).ok);
  EXPECT_TRUE(validate(heisenberg_plus_abelian()).ok);

  LieAlgebra bad(7);
  bad.set_bracket(0, 1, unit7(1));
  bad.set_bracket(1, 2, unit7(2));
  // Jacobiator by hand: [[e1,e2],e3] + [[e2,e3],e1] + [[e3,e1],e2] = 0 - e1 + 0
  auto r = validate(bad);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.triple, (std::vector<int>{1, 2, 3}));
  EXPECT_NE(r.diagnostic.find("(1,2,3)"), std::string::npos);
}

TEST(CeDifferential, Examples) {
  Rng rng(51);
  LieAlgebra ab(7);
  for (int k = 1; k <= 3; ++k) EXPECT_TRUE(ce_differential(ab, rng.multivector(7, k, Variance::form)).is_zero());

  Matrix e11(6, 6);
  e11(0, 0) = 1;
  LieAlgebra g = from_matrix(e11);
  EXPECT_EQ(ce_differential(g, ef({1})), ef({1, 7}));

  for (int t = 0; t < 20; ++t) {
    LieAlgebra m = from_matrix(rng.int_matrix(6, 6, -3, 3));
    EXPECT_TRUE(ce_differential(m, ef({7})).is_zero());
  }
  // Heisenberg: d e^3 = -e^{12}
  EXPECT_EQ(ce_differential(heisenberg_plus_abelian(), ef({3})), ef({1, 2}) * Scalar(-1));
}

TEST(CeDifferential, SquaresToZero) {
  Rng rng(52);
  std::vector<LieAlgebra> corpus = {LieAlgebra(7), heisenberg_plus_abelian()};
  for (int i = 0; i < 8; ++i) corpus.push_back(random_model(rng));
  for (int t = 0; t < 1000; ++t) {
    const LieAlgebra& g = corpus[static_cast<std::size_t>(t) % corpus.size()];
    Multivector rho = rng.multivector(7, 1 + static_cast<int>(rng.index(4)), Variance::form, 0.2);
    EXPECT_TRUE(ce_differential(g, ce_differential(g, rho)).is_zero());
  }
}

TEST(CeDifferential, MatchesDerivationActionOnModels) {
  Rng rng(53);
  for (int t = 0; t < 500; ++t) {
    Matrix f = rng.int_matrix(6, 6, -2, 2);
    LieAlgebra g = from_matrix(f);
    Multivector rho = rng.multivector(6, 1 + static_cast<int>(rng.index(5)), Variance::form, 0.4);
    EXPECT_EQ(ce_differential(g, on_u(rho)), wedge(ef({7}), on_u(derivation_action(f, rho))));
    EXPECT_TRUE(ce_differential(g, wedge(ef({7}), on_u(rho))).is_zero());
  }
}

TEST(FromMatrix, Examples) {
  EXPECT_TRUE(from_matrix(Matrix(6, 6)).is_abelian());
  LieAlgebra fil = from_matrix(Matrix::jordan_block(6, 0));
  EXPECT_TRUE(validate(fil).ok);
  EXPECT_EQ(fil.bracket(unit7(7), unit7(2)), unit7(1));
}

TEST(FindIdeal, Examples) {
  auto a = find_codim1_abelian_ideal(LieAlgebra(7));
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(a->f.is_zero());
  EXPECT_EQ(a->e7, unit7(7));
  for (int i = 0; i < 6; ++i) EXPECT_EQ(a->ideal_basis[static_cast<std::size_t>(i)], unit7(i + 1));

  Matrix f = Matrix::block_diagonal({Matrix::jordan_block(3, 2), Matrix::diagonal({1, -1, 0})});
  auto m = find_codim1_abelian_ideal(from_matrix(f));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->f, f);

  LieAlgebra h = heisenberg_plus_abelian();
  auto hi = find_codim1_abelian_ideal(h);
  ASSERT_TRUE(hi.has_value());
  // u is Abelian and contains [g,g]
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      Vector b = h.bracket(hi->ideal_basis[i], hi->ideal_basis[j]);
      for (const auto& s : b) EXPECT_TRUE(s.is_zero());
    }
  Scalar xi_of_e3;
  for (std::size_t k = 0; k < 7; ++k) xi_of_e3 += hi->xi[k] * unit7(3)[k];
  EXPECT_TRUE(xi_of_e3.is_zero());
  // the ideal data reproduces the algebra
  EXPECT_TRUE(validate(h).ok);
  EXPECT_EQ(rank(hi->f), 1u);
}

TEST(FindIdeal, NoneForNonSolvableExample) {
  // sl2 + R^4 has [g,g] = sl2 whose hyperplanes are never Abelian
  LieAlgebra g(7);
  g.set_bracket(0, 1, unit7(3));
  Vector two_e1 = unit7(1), m2e2 = unit7(2);
  two_e1[0] = 2;
  m2e2[1] = -2;
  g.set_bracket(2, 0, two_e1);
  g.set_bracket(2, 1, m2e2);
  ASSERT_TRUE(validate(g).ok);
  EXPECT_FALSE(find_codim1_abelian_ideal(g).has_value());
}

TEST(FindIdeal, RoundTripSimilar) {
  Rng rng(54);
  for (int t = 0; t < 100; ++t) {
    Matrix f;
    LieAlgebra g = random_model(rng, &f);
    auto d = find_codim1_abelian_ideal(g);
    ASSERT_TRUE(d.has_value());
    EXPECT_TRUE(iso_test_matrices(d->f, f).isomorphic);
    // the recovered data is a genuine adapted basis
    LieAlgebra back = change_basis(g, d->adapted_basis());
    EXPECT_EQ(back, from_matrix(d->f));
  }
}

TEST(NilpotentPartition, Examples) {
  EXPECT_EQ(*nilpotent_partition(Matrix::jordan_block(6, 0)), (std::vector<int>{6}));
  Matrix j = Matrix::block_diagonal({Matrix::jordan_block(2, 0), Matrix::jordan_block(2, 0), Matrix(2, 2)});
  EXPECT_EQ(*nilpotent_partition(j), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_FALSE(nilpotent_partition(Matrix::diagonal({1, 0, 0, 0, 0, 0})).has_value());
}

TEST(NilpotentPartition, ConjugationAndScalingInvariant) {
  Rng rng(55);
  const std::vector<std::vector<int>> parts = {{6}, {5, 1}, {4, 2}, {3, 2, 1}, {3, 1, 1, 1}, {2, 2, 2}};
  for (int t = 0; t < 60; ++t) {
    const auto& part = parts[static_cast<std::size_t>(t) % parts.size()];
    std::vector<Matrix> blocks;
    for (int s : part) blocks.push_back(Matrix::jordan_block(static_cast<std::size_t>(s), 0));
    Matrix f = Matrix::block_diagonal(blocks);
    Matrix p = rng.invertible(6);
    Matrix g = p * f * *inverse(p) * rng.nonzero_rational();
    EXPECT_EQ(*nilpotent_partition(g), part);
  }
}

TEST(IsoTest, Examples) {
  Matrix a = Matrix::diagonal({1, 2, 3, 4, 5, 6});
  Matrix b = Matrix::diagonal({2, 4, 6, 8, 10, 12});
  auto r = iso_test_matrices(a, b);
  EXPECT_TRUE(r.isomorphic);
  EXPECT_EQ(*r.gamma, Scalar::frac(1, 2));
  EXPECT_TRUE(iso_test(from_matrix(a), from_matrix(b)).isomorphic);
  Matrix n = Matrix::block_diagonal({Matrix::jordan_block(2, 0), Matrix(4, 4)});
  EXPECT_FALSE(iso_test_matrices(Matrix::diagonal({1, 0, 0, 0, 0, 0}), n).isomorphic);
  EXPECT_FALSE(iso_test_matrices(a, Matrix::diagonal({1, 2, 3, 4, 5, 7})).isomorphic);
  EXPECT_TRUE(iso_test_matrices(Matrix(6, 6), Matrix(6, 6)).isomorphic);
}

TEST(IsoTest, ConjugateScaledModels) {
  Rng rng(56);
  for (int t = 0; t < 60; ++t) {
    Matrix f = rng.int_matrix(6, 6, -2, 2);
    Matrix p = rng.invertible(6);
    Scalar gamma = rng.nonzero_rational(3, 3);
    Matrix f2 = p * f * *inverse(p) * gamma;
    auto r = iso_test_matrices(f, f2);
    EXPECT_TRUE(r.isomorphic) << f.str();
    auto s = iso_test_matrices(f2, f);
    EXPECT_TRUE(s.isomorphic);
    EXPECT_TRUE(iso_test_matrices(f, f).isomorphic);
  }
}
