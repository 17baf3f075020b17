#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "triage/eval.hpp"
#include "triage/topic_incremental.hpp"

using namespace triage;

TEST(JaccardSim, Examples) {
  EXPECT_DOUBLE_EQ(jaccard_sim({"a", "b", "c"}, {"a", "b", "c"}), 1.0);
  EXPECT_DOUBLE_EQ(jaccard_sim({"a", "b", "c"}, {"b", "c", "d", "e"}), 0.4);
  EXPECT_DOUBLE_EQ(jaccard_sim({"a"}, {"b"}), 0.0);
  EXPECT_DOUBLE_EQ(jaccard_sim({}, {}), 0.0);
  EXPECT_DOUBLE_EQ(jaccard_sim({}, {"a"}), 0.0);
}

TEST(JaccardSim, SymmetricBoundedAndOneOnlyForEqualSets) {
  std::mt19937_64 rng(1);
  const std::vector<std::string> vocab{"a", "b", "c", "d", "e", "f"};
  for (int i = 0; i < 500; ++i) {
    TermSet x, y;
    for (const auto& t : vocab) {
      if (rng() % 2) x.insert(t);
      if (rng() % 2) y.insert(t);
    }
    const double s = jaccard_sim(x, y);
    EXPECT_DOUBLE_EQ(s, jaccard_sim(y, x));
    EXPECT_GE(s, 0.0);
    EXPECT_LE(s, 1.0);
    if (!x.empty() || !y.empty()) {
      EXPECT_EQ(s == 1.0, x == y);
    }
  }
}

TEST(KeywordSim, SingleClusterIsZero) {
  TopicClusterState state;
  assign_topic(state, "t1", {"tulong", "baha", "baha"}, 0.01);
  EXPECT_EQ(keyword_sim({"tulong", "baha"}, state.clusters[0], state), 0.0);
}

TEST(KeywordSim, TwoClustersHandValue) {
  TopicClusterState state;
  assign_topic(state, "t1", {"tulong", "tulong", "tulong", "baha"}, 0.01);
  assign_topic(state, "t2", {"lindol"}, 0.01);
  ASSERT_EQ(state.n_clusters(), 2u);
  ASSERT_EQ(state.clusters[0].term_freq.at("tulong"), 3);
  ASSERT_EQ(state.cluster_freq.at("tulong"), 1);
  EXPECT_NEAR(keyword_sim({"tulong"}, state.clusters[0], state), 3.0 * std::log(2.0), 1e-12);
  EXPECT_NEAR(keyword_sim({"tulong"}, state.clusters[0], state), 2.0794, 5e-5);
  EXPECT_EQ(keyword_sim({"kain"}, state.clusters[0], state), 0.0);
}

TEST(KeywordSim, EmptyStateIsZero) {
  TopicClusterState state;
  TopicCluster lone;
  lone.term_freq = {{"a", 2}};
  lone.token_set = {"a"};
  EXPECT_EQ(keyword_sim({"a"}, lone, state), 0.0);
}

TEST(AssignTopic, FirstTweetOpensClusterZero) {
  TopicClusterState state;
  EXPECT_EQ(assign_topic(state, "t1", {"a", "b"}, 0.01), 0);
  EXPECT_EQ(state.n_clusters(), 1u);
}

TEST(AssignTopic, IdenticalTokensJoin) {
  TopicClusterState state;
  assign_topic(state, "t1", {"a", "b"}, 0.01);
  EXPECT_EQ(assign_topic(state, "t2", {"b", "a"}, 0.01), 0);
  EXPECT_EQ(state.clusters[0].member_ids, (std::vector<std::string>{"t1", "t2"}));
  EXPECT_EQ(state.clusters[0].term_freq.at("a"), 2);
}

TEST(AssignTopic, EmptyTokensAlwaysOpenNewCluster) {
  TopicClusterState state;
  assign_topic(state, "t1", {}, 0.0);
  EXPECT_EQ(assign_topic(state, "t2", {}, 0.0), 1);
  EXPECT_EQ(state.n_clusters(), 2u);
}

TEST(AssignTopic, ArgmaxTiesGoToLowestId) {
  TopicClusterState state;
  assign_topic(state, "t1", {"a"}, 0.5);
  assign_topic(state, "t2", {"b"}, 0.5);
  // Equal Jaccard (1/2) and equal KeywordSim against both clusters.
  EXPECT_EQ(assign_topic(state, "t3", {"a", "b"}, 0.1), 0);
}

TEST(AssignTopic, TwoDisjointVocabulariesGiveTwoPureClusters) {
  const std::vector<std::string> va{"baha", "tulong", "rescue", "bubong", "lubog"};
  const std::vector<std::string> vb{"lindol", "aftershock", "bitak", "gumuho", "simbahan"};
  std::mt19937_64 rng(4);
  TopicClusterState state;
  GoldLabels gold;
  for (int i = 0; i < 10; ++i) {
    const auto& v = i % 2 ? vb : va;
    TokenList tokens{v[rng() % 5], v[rng() % 5], v[rng() % 5]};
    const auto id = "t" + std::to_string(i);
    gold[id] = i % 2 ? "quake" : "flood";
    assign_topic(state, id, tokens, 0.01);
  }
  EXPECT_EQ(state.n_clusters(), 2u);
  const auto prf = cluster_prf(members_of(state.clusters), gold);
  EXPECT_DOUBLE_EQ(prf.precision, 100.0);
  EXPECT_DOUBLE_EQ(prf.recall, 100.0);
}

TEST(AssignTopic, BookkeepingMatchesRecountAndIsDeterministic) {
  std::mt19937_64 rng(12);
  const std::vector<std::string> vocab{"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l"};
  std::vector<TokenList> stream;
  for (int i = 0; i < 50; ++i) {
    TokenList tokens;
    for (std::size_t k = rng() % 5; k > 0; --k) tokens.push_back(vocab[rng() % vocab.size()]);
    stream.push_back(tokens);
  }
  for (double threshold : {0.01, 0.3, 0.8, 2.0}) {
    TopicClusterState a, b;
    long multiplicity = 0;
    for (std::size_t i = 0; i < stream.size(); ++i) {
      const auto id = "t" + std::to_string(i);
      const auto ca = assign_topic(a, id, stream[i], threshold);
      EXPECT_EQ(ca, assign_topic(b, id, stream[i], threshold));
      multiplicity += static_cast<long>(stream[i].size());
      ASSERT_TRUE(topic_state_consistent(a)) << "after tweet " << i;
      // keyword_sim is never negative
      const TermSet d(stream[i].begin(), stream[i].end());
      for (const auto& c : a.clusters) EXPECT_GE(keyword_sim(d, c, a), 0.0);
    }
    long assigned = 0;
    long tf_total = 0;
    for (const auto& c : a.clusters) {
      assigned += static_cast<long>(c.member_ids.size());
      for (const auto& [t, n] : c.term_freq) tf_total += n;
    }
    EXPECT_EQ(assigned, 50);
    EXPECT_EQ(tf_total, multiplicity);
  }
}
