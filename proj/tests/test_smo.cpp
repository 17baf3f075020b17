#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "triage/smo.hpp"
#include "triage/sparse.hpp"

using namespace triage;

namespace {

SparseVector sv(std::initializer_list<SparseEntry> e) { return SparseVector{std::vector<SparseEntry>(e)}; }

double dense_decision(const SvmBinaryModel& m, const SparseVector& x, std::uint32_t dim) {
  const auto xd = triage::testing::to_dense(x, dim);
  double sum = m.bias;
  for (std::size_t i = 0; i < m.support_vectors.size(); ++i) {
    const auto s = triage::testing::to_dense(m.support_vectors[i], dim);
    double d2 = 0.0;
    for (std::uint32_t k = 0; k < dim; ++k) d2 += (s[k] - xd[k]) * (s[k] - xd[k]);
    sum += m.coeffs[i] * std::exp(-m.gamma * d2);
  }
  return sum;
}

// Two Gaussian-ish blobs in 2-D, separable with a wide gap.
void separable_blobs(std::size_t n, std::vector<SparseVector>& xs, std::vector<int>& ys, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> jitter(-0.8, 0.8);
  for (std::size_t i = 0; i < n; ++i) {
    const int y = i % 2 ? 1 : -1;
    xs.push_back(sv({{0, 2.0 * y + jitter(rng)}, {1, 1.0 + jitter(rng)}}));
    ys.push_back(y);
  }
}

}  // namespace

TEST(FitIdf, Examples) {
  const auto both = fit_idf({{"baha", "x"}, {"baha"}});
  EXPECT_EQ(both.idf[*both.find("baha")], 0.0);
  EXPECT_NEAR(both.idf[*both.find("x")], std::log(2.0), 1e-15);
  EXPECT_NEAR(both.idf[*both.find("x")], 0.6931, 5e-5);
  const auto single = fit_idf({{"a", "b", "a"}});
  for (double v : single.idf) EXPECT_EQ(v, 0.0);
  EXPECT_THROW(fit_idf({}), Error);
}

TEST(FitIdf, FirstAppearanceColumnsAndNonNegativeIdf) {
  const auto t = fit_idf({{"c", "a"}, {"b", "c"}, {"a", "a"}});
  EXPECT_EQ(t.terms, (std::vector<std::string>{"c", "a", "b"}));
  EXPECT_EQ(t.doc_freq, (std::vector<std::uint64_t>{2, 2, 1}));
  for (double v : t.idf) EXPECT_GE(v, 0.0);
}

TEST(Vectorize, Examples) {
  const auto t = fit_idf({{"baha"}, {"tulong"}});
  const auto v = vectorize({"baha", "baha"}, t);
  ASSERT_EQ(v.nnz(), 1u);
  EXPECT_NEAR(v.entries[0].value, 2.0 * std::log(2.0), 1e-15);
  EXPECT_NEAR(v.entries[0].value, 1.3863, 5e-5);
  EXPECT_TRUE(vectorize({"zzz", "yyy"}, t).empty());
  const auto zero = fit_idf({{"common", "rare"}, {"common"}});
  const auto w = vectorize({"common", "rare"}, zero);
  ASSERT_EQ(w.nnz(), 1u);
  EXPECT_EQ(w.entries[0].index, *zero.find("rare"));
}

TEST(Vectorize, IndicesStrictlyIncreasingWithoutZeros) {
  std::mt19937_64 rng(2);
  const std::vector<std::string> vocab{"a", "b", "c", "d", "e", "f"};
  std::vector<TokenList> docs;
  for (int i = 0; i < 30; ++i) {
    TokenList d;
    for (std::size_t k = rng() % 6; k > 0; --k) d.push_back(vocab[rng() % vocab.size()]);
    docs.push_back(d);
  }
  const auto table = fit_idf(docs);
  for (const auto& d : docs) {
    const auto v = vectorize(d, table);
    for (std::size_t i = 0; i < v.nnz(); ++i) {
      EXPECT_NE(v.entries[i].value, 0.0);
      EXPECT_LT(v.entries[i].index, table.size());
      if (i > 0) {
        EXPECT_LT(v.entries[i - 1].index, v.entries[i].index);
      }
    }
  }
}

TEST(RbfKernel, Examples) {
  const auto x = sv({{0, 1.0}, {3, -2.0}});
  EXPECT_EQ(rbf_kernel(x, x, 0.01), 1.0);
  const auto a = sv({{0, 6.0}});
  const auto b = sv({{1, 8.0}});
  EXPECT_NEAR(rbf_kernel(a, b, 0.01), std::exp(-1.0), 1e-15);
  EXPECT_NEAR(rbf_kernel(a, b, 0.01), 0.3679, 5e-5);
}

TEST(RbfKernel, GramSymmetricWithUnitDiagonal) {
  std::mt19937_64 rng(17);
  std::vector<SparseVector> pts;
  for (int i = 0; i < 25; ++i) pts.push_back(triage::testing::random_sparse(rng, 12, 0.4));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    EXPECT_EQ(rbf_kernel(pts[i], pts[i], 0.05), 1.0);
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const double k = rbf_kernel(pts[i], pts[j], 0.05);
      EXPECT_EQ(k, rbf_kernel(pts[j], pts[i], 0.05));
      EXPECT_GT(k, 0.0);
      EXPECT_LE(k, 1.0);
    }
  }
}

TEST(TrainSmo, TwoPointClosedForm) {
  const std::vector<SparseVector> xs{sv({{0, 1.0}}), sv({{1, 2.0}})};
  const std::vector<int> ys{1, -1};
  const double gamma = 0.1;
  const double k12 = std::exp(-gamma * 5.0);
  // Equality constraint forces a1 = a2 = a; W(a) = 2a - a^2 (1 - k12).
  for (double c : {10.0, 1.0}) {
    const auto r = train_smo(xs, ys, {c, gamma, 1e-3, 10, 1});
    const double expected = std::min(c, 1.0 / (1.0 - k12));
    EXPECT_NEAR(r.alpha[0], expected, 1e-6) << "C=" << c;
    EXPECT_NEAR(r.alpha[1], expected, 1e-6);
    EXPECT_NEAR(r.model.bias, 0.0, 1e-6);
    ASSERT_EQ(r.model.support_vectors.size(), 2u);
    EXPECT_NEAR(std::abs(r.model.coeffs[0]), std::abs(r.model.coeffs[1]), 1e-12);
    EXPECT_GT(decision_value(r.model, xs[0]), 0.0);
    EXPECT_LT(decision_value(r.model, xs[1]), 0.0);
  }
}

TEST(TrainSmo, SeparableTenPointsLargeC) {
  std::vector<SparseVector> xs;
  std::vector<int> ys;
  separable_blobs(10, xs, ys, 3);
  const auto r = train_smo(xs, ys, {1000.0, 0.5, 1e-3, 10, 1});
  for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_GT(ys[i] * decision_value(r.model, xs[i]), 0.0);
  EXPECT_TRUE(r.trace.converged);
  EXPECT_TRUE(kkt_audit(xs, ys, r.alpha, r.model, 1000.0, 1e-3).empty());
}

TEST(TrainSmo, HardMarginSupportVectorsSitOnTheMargin) {
  std::vector<SparseVector> xs;
  std::vector<int> ys;
  separable_blobs(16, xs, ys, 5);
  const auto r = train_smo(xs, ys, {1e6, 0.5, 1e-4, 10, 1});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (r.alpha[i] > kSupportVectorFloor) {
      EXPECT_NEAR(ys[i] * decision_value(r.model, xs[i]), 1.0, 1e-4);
    }
  }
}

TEST(TrainSmo, DegenerateIdenticalPointsTerminate) {
  const std::vector<SparseVector> xs(5, sv({{0, 1.0}, {2, 3.0}}));
  const std::vector<int> ys{1, -1, 1, -1, 1};
  SmoResult r;
  ASSERT_NO_THROW(r = train_smo(xs, ys, {1.0, 0.01, 1e-3, 10, 1}));
  EXPECT_NEAR(decision_value(r.model, xs[0]), r.model.bias, 1e-9);
  EXPECT_TRUE(std::isfinite(r.model.bias));
}

TEST(TrainSmo, Errors) {
  const std::vector<SparseVector> xs{sv({{0, 1.0}}), sv({{0, 2.0}})};
  EXPECT_THROW(train_smo({}, {}, {}), Error);
  EXPECT_THROW(train_smo(xs, std::vector<int>{1, 1}, {}), Error);
  EXPECT_THROW(train_smo(xs, std::vector<int>{1}, {}), Error);
  EXPECT_THROW(train_smo(xs, std::vector<int>{1, 0}, {}), Error);
  EXPECT_THROW(train_smo(xs, std::vector<int>{1, -1}, {-1.0, 0.01, 1e-3, 10, 1}), Error);
}

TEST(TrainSmo, DualObjectiveIsMonotoneAndMatchesRecompute) {
  std::mt19937_64 rng(23);
  for (int round = 0; round < 5; ++round) {
    std::vector<SparseVector> xs;
    std::vector<int> ys;
    for (int i = 0; i < 40; ++i) {
      xs.push_back(triage::testing::random_sparse(rng, 10, 0.5));
      ys.push_back(rng() % 2 ? 1 : -1);
    }
    ys[0] = 1;
    ys[1] = -1;
    const SmoParams p{1.0, 0.2, 1e-3, 10, static_cast<std::uint64_t>(round)};
    const auto r = train_smo(xs, ys, p, true);
    ASSERT_FALSE(r.trace.objective.empty());
    double prev = 0.0;
    for (double w : r.trace.objective) {
      EXPECT_GE(w, prev - 1e-9);
      prev = w;
    }
    EXPECT_NEAR(r.trace.objective.back(), dual_objective(xs, ys, r.alpha, p.gamma), 1e-8);
    double balance = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      EXPECT_GE(r.alpha[i], 0.0);
      EXPECT_LE(r.alpha[i], p.c);
      balance += r.alpha[i] * ys[i];
    }
    EXPECT_NEAR(balance, 0.0, 1e-9);
    EXPECT_TRUE(r.trace.converged);
    EXPECT_TRUE(kkt_audit(xs, ys, r.alpha, r.model, p.c, 1e-3).empty());
  }
}

TEST(TrainSmo, SameSeedSameModel) {
  std::mt19937_64 rng(31);
  std::vector<SparseVector> xs;
  std::vector<int> ys;
  for (int i = 0; i < 30; ++i) {
    xs.push_back(triage::testing::random_sparse(rng, 8, 0.5));
    ys.push_back(i % 3 ? 1 : -1);
  }
  const auto a = train_smo(xs, ys, {1.0, 0.1, 1e-3, 10, 99});
  const auto b = train_smo(xs, ys, {1.0, 0.1, 1e-3, 10, 99});
  EXPECT_EQ(a.alpha, b.alpha);
  EXPECT_EQ(a.model.bias, b.model.bias);
}

TEST(DecisionValue, SparseMatchesDenseOracle) {
  std::mt19937_64 rng(41);
  constexpr std::uint32_t kDim = 15;
  std::vector<SparseVector> xs;
  std::vector<int> ys;
  for (int i = 0; i < 30; ++i) {
    xs.push_back(triage::testing::random_sparse(rng, kDim, 0.4));
    ys.push_back(i % 2 ? 1 : -1);
  }
  const auto r = train_smo(xs, ys, {1.0, 0.1, 1e-3, 10, 3});
  for (int i = 0; i < 100; ++i) {
    const auto x = triage::testing::random_sparse(rng, kDim, 0.3);
    EXPECT_NEAR(decision_value(r.model, x), dense_decision(r.model, x, kDim), 1e-10);
  }
  EXPECT_TRUE(std::isfinite(decision_value(r.model, SparseVector{})));
  EXPECT_NEAR(decision_value(r.model, SparseVector{}), dense_decision(r.model, SparseVector{}, kDim), 1e-10);
}
