#include <random>

#include <gtest/gtest.h>

#include "triage/needs_svm.hpp"

using namespace triage;

namespace {

// 20 documents per class, each class drawing from its own 6-term vocabulary.
std::vector<std::pair<TokenList, NeedLabel>> disjoint_fixture(std::size_t per_class, std::uint64_t seed,
                                                              const std::vector<NeedLabel>& classes) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<TokenList, NeedLabel>> docs;
  for (auto label : classes) {
    for (std::size_t i = 0; i < per_class; ++i) {
      TokenList tokens;
      for (std::size_t k = 2 + rng() % 4; k > 0; --k) {
        tokens.push_back(std::string(to_string(label)) + "_w" + std::to_string(rng() % 6));
      }
      docs.emplace_back(tokens, label);
    }
  }
  return docs;
}

std::vector<NeedLabel> all_needs() { return {kNeedOrder.begin(), kNeedOrder.end()}; }

SvmMulticlassModel hand_model(double rescue_vs_relief, double rescue_vs_shelter, double relief_vs_shelter) {
  SvmMulticlassModel m;
  m.classes = {NeedLabel::Rescue, NeedLabel::Relief, NeedLabel::Shelter};
  m.idf = fit_idf({{"x"}});
  auto pair = [](NeedLabel a, NeedLabel b, double bias) {
    PairwiseSvm p;
    p.positive = a;
    p.negative = b;
    p.model.bias = bias;
    return p;
  };
  m.pairs = {pair(NeedLabel::Rescue, NeedLabel::Relief, rescue_vs_relief),
             pair(NeedLabel::Rescue, NeedLabel::Shelter, rescue_vs_shelter),
             pair(NeedLabel::Relief, NeedLabel::Shelter, relief_vs_shelter)};
  return m;
}

}  // namespace

TEST(TrainNeeds, DisjointVocabulariesAreLearnedExactly) {
  const auto docs = disjoint_fixture(20, 1, all_needs());
  std::vector<PairTrainingInfo> info;
  const auto model = train_needs_tokens(docs, {}, &info);
  EXPECT_EQ(model.classes.size(), 6u);
  EXPECT_EQ(model.pairs.size(), 15u);
  for (const auto& [tokens, label] : docs) EXPECT_EQ(predict_need(model, tokens), label);
  ASSERT_EQ(info.size(), 15u);
  for (const auto& p : info) {
    EXPECT_TRUE(p.result.trace.converged);
    EXPECT_TRUE(kkt_audit(p.xs, p.ys, p.result.alpha, p.result.model, model.c, 1e-3).empty())
        << to_string(p.positive) << " vs " << to_string(p.negative);
  }
}

TEST(TrainNeeds, TwoClassModelOnlyPredictsThoseClasses) {
  const auto docs = disjoint_fixture(10, 2, {NeedLabel::Cash, NeedLabel::Prayer});
  const auto model = train_needs_tokens(docs, {});
  EXPECT_EQ(model.pairs.size(), 1u);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    TokenList probe{"Cash_w" + std::to_string(rng() % 6), "Rescue_w1", "noise" + std::to_string(i)};
    const auto label = predict_need(model, probe);
    EXPECT_TRUE(label == NeedLabel::Cash || label == NeedLabel::Prayer);
  }
}

TEST(TrainNeeds, AllOutOfVocabularyInputIsDeterministic) {
  const auto docs = disjoint_fixture(20, 4, all_needs());
  const auto a = train_needs_tokens(docs, {});
  const auto b = train_needs_tokens(docs, {});
  const auto first = predict_need(a, {"zzz", "qqq"});
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(predict_need(a, {"zzz", "qqq"}), first);
    EXPECT_EQ(predict_need(b, {}), predict_need(a, {}));
  }
}

TEST(TrainNeeds, Errors) {
  EXPECT_THROW(train_needs_tokens(disjoint_fixture(5, 1, {NeedLabel::Relief}), {}), Error);
  EXPECT_THROW(train_needs({{"a", "Rescue"}, {"b", "Snacks"}}, {}, {}), Error);
  EXPECT_THROW(predict_need(SvmMulticlassModel{}, {"a"}), Error);
}

TEST(TrainNeeds, AcceptsLabelNamesCaseInsensitively) {
  const auto model = train_needs({{"boat roof", "rescue"}, {"rice water", "RELIEF"}, {"amen", "Prayers"}}, {}, {});
  EXPECT_EQ(model.classes, (std::vector<NeedLabel>{NeedLabel::Rescue, NeedLabel::Relief, NeedLabel::Prayer}));
}

TEST(TrainNeeds, L2NormalizationOption) {
  const auto docs = disjoint_fixture(10, 6, all_needs());
  NeedsTrainingParams p;
  p.l2_normalize = true;
  p.gamma = 1.0;
  const auto model = train_needs_tokens(docs, p);
  EXPECT_TRUE(model.l2_normalize);
  for (const auto& [tokens, label] : docs) EXPECT_EQ(predict_need(model, tokens), label);
}

TEST(PredictNeed, VoteTieBrokenByMarginThenOrder) {
  // One vote each; Rescue and Shelter tie on margin 1, so order decides.
  auto tied = predict_need_detail(hand_model(1.0, -1.0, 0.5), {});
  EXPECT_EQ(tied.votes[index_of(NeedLabel::Rescue)], 1);
  EXPECT_EQ(tied.votes[index_of(NeedLabel::Shelter)], 1);
  EXPECT_EQ(tied.label, NeedLabel::Rescue);
  // Larger Shelter margin wins.
  EXPECT_EQ(predict_need(hand_model(1.0, -2.0, 0.5), {}), NeedLabel::Shelter);
  // Clear majority.
  EXPECT_EQ(predict_need(hand_model(-1.0, 1.0, 1.0), {}), NeedLabel::Relief);
  // Zero decision value votes for the positive (earlier) class.
  EXPECT_EQ(predict_need(hand_model(0.0, 0.0, 0.0), {}), NeedLabel::Rescue);
}
