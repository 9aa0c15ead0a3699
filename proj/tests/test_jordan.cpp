#include <cocal/corpus.hpp>
#include <cocal/jordan.hpp>
#include <cocal/random.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace cocal;

namespace {

Matrix companion(const std::vector<long>& low_coeffs) {
  // monic x^n + c_{n-1} x^{n-1} + ... + c_0
  const std::size_t n = low_coeffs.size();
  Matrix m(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -low_coeffs[i];
  return m;
}

Matrix diag6(std::vector<long> d) {
  Vector v;
  for (long x : d) v.push_back(x);
  return Matrix::diagonal(v);
}

const SegreEntry* entry_at(const SegreData& s, const Scalar& l) {
  for (const auto& e : s.entries)
    if (e.exact && *e.exact == l) return &e;
  return nullptr;
}

}  // namespace

TEST(Segre, Examples) {
  SegreData j6 = segre_data(Matrix::jordan_block(6, 0));
  EXPECT_TRUE(j6.exact);
  ASSERT_EQ(j6.entries.size(), 1u);
  EXPECT_EQ(j6.entries[0].blocks, (std::vector<int>{6}));

  SegreData d = segre_data(diag6({2, 2, 2, 2, -2, -2}));
  EXPECT_TRUE(d.exact);
  ASSERT_EQ(d.entries.size(), 2u);
  EXPECT_EQ(entry_at(d, 2)->blocks, (std::vector<int>{1, 1, 1, 1}));
  EXPECT_EQ(entry_at(d, -2)->blocks, (std::vector<int>{1, 1}));
}

TEST(Segre, NumericCompanionOfCubedQuadratic) {
  // (x^2 - 2)^3 = x^6 - 6x^4 + 12x^2 - 8, nonderogatory
  SegreData s = segre_data(companion({-8, 0, 12, 0, -6, 0}));
  EXPECT_FALSE(s.exact);
  ASSERT_EQ(s.entries.size(), 2u);
  for (const auto& e : s.entries) {
    EXPECT_NEAR(std::abs(e.approx.real()), std::sqrt(2.0), 1e-6);
    EXPECT_EQ(e.blocks, (std::vector<int>{3}));
  }
}

TEST(Segre, BlocksSumToSixOnRandomModels) {
  Rng rng(61);
  for (int t = 0; t < 50; ++t) EXPECT_EQ(segre_data(random_conjugated_model(rng)).total_size(), 6u);
}

TEST(SpSimilar, Examples) {
  auto r = sp_similar(diag6({1, -1, 2, -2, 0, 0}));
  EXPECT_TRUE(r.value);
  EXPECT_TRUE(r.route_b_checked);
  EXPECT_FALSE(sp_similar(nilpotent_model({5, 1})).value);
  EXPECT_FALSE(sp_similar(Matrix::identity(6)).value);
  // F ~ -F holds but there are three blocks of size 1
  EXPECT_FALSE(sp_similar(nilpotent_model({3, 1, 1, 1})).value);
  EXPECT_TRUE(sp_similar(nilpotent_model({3, 3})).value);
}

TEST(SpSimilar, RoutesAgreeOnRandomModels) {
  Rng rng(62);
  int checked = 0;
  for (int t = 0; t < 150; ++t) {
    Matrix f = random_conjugated_model(rng);
    SpResult r;
    ASSERT_NO_THROW(r = sp_similar(f)) << f.str();
    if (r.route_b_checked) ++checked;
  }
  EXPECT_EQ(checked, 150);
}

TEST(DecideG2, Examples) {
  EXPECT_TRUE(decide_g2(Matrix(6, 6)));
  EXPECT_FALSE(decide_g2(nilpotent_model({3, 2, 1})));
  EXPECT_TRUE(decide_g2(nilpotent_model({2, 2, 2})));
  for (const auto& row : nilpotent_manifest()) EXPECT_EQ(decide_g2(nilpotent_model(row.partition)), row.g2);
}

TEST(PairPartitions, EnumerationShape) {
  auto all = all_pair_partitions();
  ASSERT_EQ(all.size(), 45u);
  EXPECT_EQ(all.front().str(), "I1={1,2} I2={3,4} I3={5,6}");
  for (const auto& p : all) {
    int mask = 0;
    for (const auto& s : p.sets) mask |= (1 << s[0]) | (1 << s[1]);
    EXPECT_EQ(mask, 0x7e);
    EXPECT_LT(p.sets[0], p.sets[1]);
  }
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end(),
                             [](const PairPartition& a, const PairPartition& b) { return a.sets < b.sets; }));
}

TEST(PartitionSearch, Examples) {
  auto p = partition_search(make_layout({2, 2, 2, 2, -2, -2}, {1, 1, 1, 1, 1, 1}));
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->str(), "I1={1,2} I2={3,4} I3={5,6}");
  EXPECT_TRUE(partition_search(jnf_layout(segre_data(diag6({2, 2, 2, 2, -2, -2})))).has_value());
  EXPECT_FALSE(partition_search(make_layout({1, 1, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1})).has_value());
  EXPECT_FALSE(partition_search(jnf_layout(segre_data(Matrix::identity(6)))).has_value());
  auto z = partition_search(jnf_layout(segre_data(Matrix::jordan_block(6, 0))));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->str(), "I1={1,2} I2={3,4} I3={5,6}");
}

TEST(PartitionSearch, LayoutFollowsBlockOrder) {
  JNFLayout l = jnf_layout(segre_data(nilpotent_model({3, 2, 1})));
  EXPECT_EQ(l.jb, (std::vector<int>{1, 1, 1, 2, 2, 3}));
}

TEST(DecideG2Star, Examples) {
  EXPECT_TRUE(decide_g2star(diag6({2, 2, 2, 2, -2, -2})).value);
  EXPECT_FALSE(decide_g2(diag6({2, 2, 2, 2, -2, -2})));
  for (const auto& part : partitions_of_six()) EXPECT_TRUE(decide_g2star(nilpotent_model(part)).value);
  EXPECT_FALSE(decide_g2star(Matrix::identity(6)).value);
}

TEST(DecideG2Star, NumericLayoutIsFlagged) {
  auto d = decide_g2star(companion({-8, 0, 12, 0, -6, 0}));
  EXPECT_FALSE(d.exact);
  // +-sqrt2 with two blocks of size 3: {a,a},{-a,-a} sums never match, but
  // {a,-a},{a,-a},{a,-a} does and the size-3 blocks are split across sets
  EXPECT_TRUE(d.value);
}

TEST(Decisions, ConjugationAndScalingInvariance) {
  Rng rng(63);
  for (int t = 0; t < 100; ++t) {
    Matrix f = random_conjugated_model(rng);
    Matrix p = rng.invertible(6);
    Matrix g = p * f * *inverse(p);
    Matrix h = f * rng.nonzero_rational(3, 3);
    const bool a = decide_g2(f), b = decide_g2star(f).value;
    EXPECT_EQ(decide_g2(g), a);
    EXPECT_EQ(decide_g2(h), a);
    EXPECT_EQ(decide_g2star(g).value, b);
    EXPECT_EQ(decide_g2star(h).value, b);
    EXPECT_EQ(decide_g2c_nondeg(h), a);
    EXPECT_EQ(decide_g2c(g).value, b);
  }
}

TEST(Decisions, MonotonicityAndSubsumption) {
  Rng rng(64);
  int positives = 0;
  for (int t = 0; t < 200; ++t) {
    Matrix f = random_conjugated_model(rng);
    if (sp_similar(f).value) {
      ++positives;
      EXPECT_TRUE(partition_search(jnf_layout(segre_data(f))).has_value()) << f.str();
    }
  }
  EXPECT_GT(positives, 20);
}

TEST(Decisions, RealComplexBridge) {
  Rng rng(65);
  for (int t = 0; t < 60; ++t) {
    Matrix f = random_conjugated_model(rng);
    // the same entries read over Q(i): a Gaussian similarity keeps the decisions
    Matrix p = rng.invertible(6);
    p(0, 1) += Scalar::i();
    if (determinant(p).is_zero()) continue;
    Matrix fc = p * f * *inverse(p);
    EXPECT_EQ(decide_g2c(fc).value, decide_g2star(f).value);
    EXPECT_EQ(decide_g2c_nondeg(fc), decide_g2(f));
  }
}
