#pragma once

// Single-pass incremental clustering by disaster topic. A tweet's similarity
// to a cluster is JaccardSim(tokens, cluster tokens) plus KeywordSim, the
// sum over shared terms of TF * ln(N / CF).

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "triage/textprep.hpp"
#include "triage/types.hpp"

namespace triage {

using TermSet = std::set<std::string>;

struct TopicCluster {
  ClusterId id = 0;
  std::vector<std::string> member_ids;
  TermSet token_set;
  std::map<std::string, long> term_freq;
};

struct TopicClusterState {
  std::vector<TopicCluster> clusters;
  std::map<std::string, long> cluster_freq;

  std::size_t n_clusters() const { return clusters.size(); }
};

/// |a ∩ b| / |a ∪ b|, and 0 when both are empty.
inline double jaccard_sim(const TermSet& a, const TermSet& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t common = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      ++common;
      ++ia;
      ++ib;
    }
  }
  const std::size_t unioned = a.size() + b.size() - common;
  return static_cast<double>(common) / static_cast<double>(unioned);
}

/// Natural log. N and CF are read from `state` as it stands, so call this
/// before the tweet is placed.
inline double keyword_sim(const TermSet& tweet_tokens, const TopicCluster& cluster,
                          const TopicClusterState& state) {
  const auto n = static_cast<double>(state.n_clusters());
  if (n == 0.0) return 0.0;
  double sum = 0.0;
  for (const auto& term : tweet_tokens) {
    const auto tf = cluster.term_freq.find(term);
    if (tf == cluster.term_freq.end() || tf->second <= 0) continue;
    const auto cf = state.cluster_freq.find(term);
    if (cf == state.cluster_freq.end() || cf->second <= 0) continue;
    sum += static_cast<double>(tf->second) * std::log(n / static_cast<double>(cf->second));
  }
  return sum;
}

inline double topic_similarity(const TermSet& tweet_tokens, const TopicCluster& cluster,
                               const TopicClusterState& state) {
  return jaccard_sim(tweet_tokens, cluster.token_set) + keyword_sim(tweet_tokens, cluster, state);
}

namespace detail {

inline void add_to_topic_cluster(TopicClusterState& state, TopicCluster& cluster, const std::string& id,
                                 const TokenList& tokens) {
  cluster.member_ids.push_back(id);
  for (const auto& t : tokens) {
    ++cluster.term_freq[t];
    if (cluster.token_set.insert(t).second) ++state.cluster_freq[t];
  }
}

}  // namespace detail

/// Places one tweet and returns the receiving cluster id. The tweet joins
/// the most similar cluster when that similarity reaches `threshold` (ties go
/// to the lowest id); otherwise it opens a new cluster. Tweets with no tokens
/// always open a new cluster.
inline ClusterId assign_topic(TopicClusterState& state, const std::string& tweet_id, const TokenList& tokens,
                              double threshold) {
  const TermSet d(tokens.begin(), tokens.end());
  if (!d.empty() && !state.clusters.empty()) {
    std::size_t best = 0;
    double best_sim = -1.0;
    for (std::size_t j = 0; j < state.clusters.size(); ++j) {
      const double sim = topic_similarity(d, state.clusters[j], state);
      if (sim > best_sim) {
        best_sim = sim;
        best = j;
      }
    }
    if (best_sim >= threshold) {
      detail::add_to_topic_cluster(state, state.clusters[best], tweet_id, tokens);
      return state.clusters[best].id;
    }
  }
  TopicCluster fresh;
  fresh.id = static_cast<ClusterId>(state.clusters.size());
  state.clusters.push_back(std::move(fresh));
  detail::add_to_topic_cluster(state, state.clusters.back(), tweet_id, tokens);
  return state.clusters.back().id;
}

inline ClusterId assign_topic(TopicClusterState& state, Tweet& tweet, double threshold) {
  const auto id = assign_topic(state, tweet.id, tweet.tokens, threshold);
  tweet.topic_cluster = id;
  return id;
}

/// Recounts cluster_freq from the clusters' token sets.
inline std::map<std::string, long> recount_cluster_freq(const TopicClusterState& state) {
  std::map<std::string, long> cf;
  for (const auto& c : state.clusters) {
    for (const auto& t : c.token_set) ++cf[t];
  }
  return cf;
}

/// True when every bookkeeping invariant of the state holds.
inline bool topic_state_consistent(const TopicClusterState& state) {
  for (std::size_t j = 0; j < state.clusters.size(); ++j) {
    const auto& c = state.clusters[j];
    if (c.id != static_cast<ClusterId>(j)) return false;
    TermSet keys;
    for (const auto& [term, count] : c.term_freq) {
      if (count < 1) return false;
      keys.insert(term);
    }
    if (keys != c.token_set) return false;
  }
  return recount_cluster_freq(state) == state.cluster_freq;
}

}  // namespace triage
