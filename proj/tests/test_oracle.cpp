#include <cocal/certificate.hpp>
#include <cocal/corpus.hpp>
#include <cocal/jordan.hpp>
#include <cocal/oracle.hpp>
#include <cocal/random.hpp>

#include <gtest/gtest.h>

using namespace cocal;

namespace {

Matrix diag6(std::vector<long> d) {
  Vector v;
  for (long x : d) v.push_back(x);
  return Matrix::diagonal(v);
}

Multivector f6(std::vector<int> idx) { return Multivector::basis(6, idx, Variance::form); }

bool contains_in_span(const std::vector<Multivector>& basis, const Multivector& x) {
  std::vector<Vector> cols;
  for (const auto& b : basis) cols.push_back(b.to_coords());
  const std::size_t r = cols.empty() ? 0 : rank(Matrix::from_columns(cols));
  cols.push_back(x.to_coords());
  return rank(Matrix::from_columns(cols)) == r;
}

// antisymmetric matrix of a 2-vector in dimension 6
Matrix skew(const Multivector& x) {
  Matrix a(6, 6);
  for (const auto& [m, c] : x.terms()) {
    auto idx = indices_of(m);
    auto i = static_cast<std::size_t>(idx[0] - 1), j = static_cast<std::size_t>(idx[1] - 1);
    a(i, j) = c;
    a(j, i) = -c;
  }
  return a;
}

// (sum c_i X_i)^3 != 0 for some c iff det(sum c_i A_i) = Pf^2 is not
// identically zero; a degree-6 polynomial cannot vanish on {-3..3}^3.
bool cubic_nonzero_by_determinant(const std::vector<Multivector>& xs) {
  std::vector<Matrix> a;
  for (const auto& x : xs) a.push_back(skew(x));
  for (int c0 = -3; c0 <= 3; ++c0)
    for (int c1 = -3; c1 <= 3; ++c1)
      for (int c2 = -3; c2 <= 3; ++c2) {
        Matrix m = a[0] * Scalar(c0) + a[1] * Scalar(c1) + a[2] * Scalar(c2);
        if (!determinant(m).is_zero()) return true;
      }
  return false;
}

// sums of one or two decomposables, optionally inside e_1..e_5
Multivector low_rank_bivector(Rng& rng, bool in_hyperplane) {
  Multivector x(6, 2, Variance::vector);
  const long terms = rng.integer(1, 2);
  for (long t = 0; t < terms; ++t) {
    Vector a = rng.rational_vector(6, 1, 1), b = rng.rational_vector(6, 1, 1);
    if (in_hyperplane) a[5] = b[5] = 0;
    x += wedge(Multivector::from_coords(a, Variance::vector), Multivector::from_coords(b, Variance::vector));
  }
  return x;
}

}  // namespace

TEST(ClosedFourForms, Examples) {
  EXPECT_EQ(closed_fourform_space(Matrix(6, 6)).basis.size(), 15u);
  EXPECT_TRUE(closed_fourform_space(Matrix::identity(6)).basis.empty());
  auto s = closed_fourform_space(diag6({1, -1, 0, 0, 0, 0}));
  for (auto idx : {std::vector<int>{1, 2, 3, 4}, {1, 2, 5, 6}, {3, 4, 5, 6}})
    EXPECT_TRUE(contains_in_span(s.basis, f6(idx)));
  for (const auto& b : s.basis) EXPECT_TRUE(derivation_action(diag6({1, -1, 0, 0, 0, 0}), b).is_zero());
}

TEST(ClosedFourForms, WeightCountOnDiagonals) {
  // e^{abcd} has weight -(l_a+l_b+l_c+l_d); the kernel counts zero weights
  Rng rng(71);
  for (int t = 0; t < 30; ++t) {
    std::vector<long> d;
    for (int i = 0; i < 6; ++i) d.push_back(rng.integer(-2, 2));
    std::size_t zero = 0;
    for (Mask m : masks_of_grade(6, 4)) {
      long w = 0;
      for (int i : indices_of(m)) w += d[static_cast<std::size_t>(i - 1)];
      if (w == 0) ++zero;
    }
    EXPECT_EQ(closed_fourform_space(diag6(d)).basis.size(), zero);
  }
}

TEST(MaxLength, Examples) {
  auto z = max_length_in_space(closed_fourform_space(Matrix(6, 6)));
  EXPECT_EQ(z.maxlen, 3);
  ASSERT_TRUE(z.witness.has_value());
  EXPECT_EQ(length_cograde2(*z.witness), 3);

  ClosedFourFormSpace one;
  one.basis = {f6({1, 2, 3, 4})};
  one.duals = {dual_iso(one.basis[0], ideal_dual_volume())};
  EXPECT_EQ(max_length_in_space(one).maxlen, 1);

  auto none = max_length_in_space(closed_fourform_space(Matrix::identity(6)));
  EXPECT_EQ(none.maxlen, 0);
  EXPECT_FALSE(none.witness.has_value());
}

TEST(MaxLength, PolarizationSoundness) {
  Rng rng(72);
  int positive = 0, negative = 0;
  for (int t = 0; t < 100; ++t) {
    const bool flat = t % 3 == 0;
    std::vector<Multivector> xs;
    for (int i = 0; i < 3; ++i) xs.push_back(low_rank_bivector(rng, flat));
    const bool expect = cubic_nonzero_by_determinant(xs);
    LengthSearch l = max_length_in_span(xs);
    EXPECT_EQ(l.maxlen == 3, expect);
    if (l.maxlen > 0) {
      Multivector w(6, 2, Variance::vector);
      for (std::size_t i = 0; i < 3; ++i) w += xs[i] * l.coefficients[i];
      EXPECT_EQ(length_grade2(w), l.maxlen);
      for (const auto& c : l.coefficients) EXPECT_TRUE(c.re() >= 0 && c.re() <= 3);
    }
    (expect ? positive : negative)++;
  }
  EXPECT_GT(positive, 10);
  EXPECT_GT(negative, 10);
}

TEST(OracleDecide, Examples) {
  auto n51 = oracle_decide(nilpotent_model({5, 1}));
  EXPECT_FALSE(n51.g2);
  EXPECT_TRUE(n51.g2star);
  auto d = oracle_decide(diag6({2, 2, 2, 2, -2, -2}));
  EXPECT_FALSE(d.g2);
  EXPECT_TRUE(d.g2star);
  auto z = oracle_decide(Matrix(6, 6));
  EXPECT_TRUE(z.g2);
  EXPECT_TRUE(z.g2star);
  auto id = oracle_decide(Matrix::identity(6));
  EXPECT_FALSE(id.g2star);
}

TEST(OracleDecide, NilpotentCorpus) {
  for (const auto& row : nilpotent_manifest()) {
    auto o = oracle_decide(nilpotent_model(row.partition));
    EXPECT_EQ(o.g2, row.g2) << partition_name(row.partition);
    EXPECT_EQ(o.g2star, row.g2star) << partition_name(row.partition);
  }
}

TEST(OracleDecide, AgreesWithJordanDecisions) {
  Rng rng(73);
  int g2 = 0, g2star_only = 0, neither = 0;
  for (int t = 0; t < 100; ++t) {
    Matrix f = random_conjugated_model(rng);
    auto o = oracle_decide(f);
    auto star = decide_g2star(f);
    ASSERT_TRUE(star.exact);
    EXPECT_EQ(o.g2, decide_g2(f)) << f.str();
    EXPECT_EQ(o.g2star, star.value) << f.str();
    if (o.g2)
      ++g2;
    else if (o.g2star)
      ++g2star_only;
    else
      ++neither;
  }
  EXPECT_GT(g2, 5);
  EXPECT_GT(g2star_only, 5);
  EXPECT_GT(neither, 5);
}

TEST(OracleDecide, AgreesOnNumericSpectrum) {
  Matrix c(6, 6);
  for (std::size_t i = 1; i < 6; ++i) c(i, i - 1) = 1;
  const long low[6] = {-8, 0, 12, 0, -6, 0};
  for (std::size_t i = 0; i < 6; ++i) c(i, 5) = -low[i];
  auto o = oracle_decide(c);
  EXPECT_EQ(o.g2star, decide_g2star(c).value);
  EXPECT_EQ(o.g2, decide_g2(c));
}

TEST(InvariantSymplecticForm, Examples) {
  auto z = invariant_symplectic_form(Matrix(6, 6));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(length_grade2(*z), 3);
  EXPECT_FALSE(invariant_symplectic_form(Matrix::identity(6)).has_value());

  // direct substitution into w(Fx, y) + w(x, Fy)
  Matrix f = diag6({1, -1, 0, 0, 0, 0});
  Multivector w = f6({1, 2}) + f6({3, 4}) + f6({5, 6});
  EXPECT_TRUE(derivation_action(f, w).is_zero());
  auto found = invariant_symplectic_form(f);
  ASSERT_TRUE(found.has_value());
  EXPECT_TRUE(derivation_action(f, *found).is_zero());
  EXPECT_EQ(length_grade2(*found), 3);
}

TEST(InvariantSymplecticForm, ExistsIffSpSimilar) {
  Rng rng(74);
  for (int t = 0; t < 100; ++t) {
    Matrix f = random_conjugated_model(rng);
    auto w = invariant_symplectic_form(f);
    EXPECT_EQ(w.has_value(), sp_similar(f).value) << f.str();
    if (w) {
      EXPECT_TRUE(derivation_action(f, *w).is_zero());
    }
  }
}

TEST(NullTransport, FrozenConstantMatchesRecomputation) {
  NullTransport nt = null_transport();
  EXPECT_EQ(nt, compute_null_transport());
  Scalar norm;
  for (std::size_t i = 0; i < 7; ++i) norm += (i < 4 ? Scalar(-1) : Scalar(1)) * nt.alpha[i] * nt.alpha[i];
  EXPECT_TRUE(norm.is_zero());
  EXPECT_EQ(nt.h.row(6), nt.alpha);
  Multivector rebuilt = embed(f6({1, 2, 3, 4}) + f6({1, 2, 5, 6}), 7, {1, 2, 3, 4, 5, 6}) +
                        wedge(embed(nt.rho, 7, {1, 2, 3, 4, 5, 6}), Multivector::basis(7, {7}, Variance::form));
  EXPECT_EQ(expand_in_basis(rebuilt, nt.h), standard_hodge_dual(Kind::G2STAR));
}

TEST(NormalForms, Length3AndLength2) {
  Rng rng(75);
  for (int t = 0; t < 40; ++t) {
    Matrix p = rng.invertible(6, -2, 2);
    for (int eps : {1, -1}) {
      Multivector omega = expand_in_basis(omega_pattern(1), p) * rng.nonzero_rational();
      NormalForm nf = normal_form_length3(omega, eps);
      EXPECT_EQ(coefficients_in_basis(omega, nf.rows), omega_pattern(eps) * nf.kappa);
    }
    Multivector two = expand_in_basis(f6({1, 2, 3, 4}) + f6({3, 4, 5, 6}), p) * rng.nonzero_rational();
    EXPECT_EQ(coefficients_in_basis(two, normal_form_length2(two)), f6({1, 2, 3, 4}) + f6({1, 2, 5, 6}));
  }
}

TEST(Certificate, StandardForZero) {
  Certificate c = build_certificate(Matrix(6, 6), Kind::G2);
  EXPECT_EQ(c.psi, standard_hodge_dual(Kind::G2));
  EXPECT_EQ(c.exhibited_basis, Matrix::identity(7));
  EXPECT_EQ(c.scale, Scalar(1));
  EXPECT_EQ(c.path, "length3");
  VerifyReport r = verify_certificate(c, Matrix(6, 6));
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.passed, (std::vector<std::string>{"shape", "closed", "pattern", "recognition", "hodge_dual"}));
  EXPECT_EQ(r.signature->positive, 7u);
}

TEST(Certificate, PerturbedCoefficientFailsPattern) {
  Certificate c = build_certificate(Matrix(6, 6), Kind::G2);
  c.psi.add(mask_of({1, 2, 3, 4}), 1);
  c.omega_part.add(mask_of({1, 2, 3, 4}), 1);
  VerifyReport r = verify_certificate(c, Matrix(6, 6));
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.failed[0].name, "pattern");
}

TEST(Certificate, DecisionFalseThrows) {
  EXPECT_THROW(build_certificate(Matrix::identity(6), Kind::G2), DecisionFalse);
  EXPECT_THROW(build_certificate(nilpotent_model({5, 1}), Kind::G2), DecisionFalse);
  EXPECT_THROW(build_certificate(Matrix::identity(6), Kind::G2STAR), DecisionFalse);
}

TEST(Certificate, LengthTwoPath) {
  Matrix f = diag6({2, 2, 2, 2, -2, -2});
  for (Kind k : {Kind::G2STAR, Kind::G2C}) {
    Certificate c = build_certificate(f, k);
    EXPECT_EQ(c.path, "length2");
    VerifyReport r = verify_certificate(c, f);
    EXPECT_TRUE(r.ok()) << (r.ok() ? "" : r.failed[0].name);
  }
  EXPECT_EQ(verify_certificate(build_certificate(f, Kind::G2STAR), f).signature->negative, 4u);
}

TEST(Certificate, NilpotentCorpus) {
  for (const auto& row : nilpotent_manifest()) {
    Matrix f = nilpotent_model(row.partition);
    for (Kind k : {Kind::G2, Kind::G2STAR, Kind::G2C}) {
      if (k == Kind::G2 && !row.g2) continue;
      Certificate c = build_certificate(f, k);
      VerifyReport r = verify_certificate(c, f);
      EXPECT_TRUE(r.ok()) << partition_name(row.partition) << " " << to_string(k);
    }
  }
}

TEST(Certificate, RandomModels) {
  Rng rng(76);
  for (int t = 0; t < 40; ++t) {
    Matrix f = random_conjugated_model(rng);
    auto o = oracle_decide(f);
    for (Kind k : {Kind::G2, Kind::G2STAR, Kind::G2C}) {
      const bool positive = k == Kind::G2 ? o.g2 : o.g2star;
      if (!positive) {
        EXPECT_THROW(build_certificate(f, k), DecisionFalse);
        continue;
      }
      VerifyReport r = verify_certificate(build_certificate(f, k), f);
      EXPECT_TRUE(r.ok()) << f.str() << to_string(k);
    }
  }
}
