#pragma once

// Location/time clustering: Jaccard similarity over location sets, gated by
// the interarrival time to a cluster's most recent member.

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "triage/topic_incremental.hpp"
#include "triage/types.hpp"

namespace triage {

inline constexpr UtcSeconds kDefaultIatLimit = 7 * kSecondsPerDay;

struct GeoTemporalCluster {
  ClusterId id = 0;
  std::vector<std::string> member_ids;
  TermSet location_set;
  UtcSeconds earliest_time = 0;
  UtcSeconds latest_time = 0;
};

/// One accepted join, kept so the IAT gate can be audited afterwards.
struct StJoin {
  std::string tweet_id;
  ClusterId cluster = 0;
  UtcSeconds iat = 0;
  double similarity = 0.0;
};

struct SpatioTemporalState {
  std::vector<GeoTemporalCluster> clusters;
  std::vector<StJoin> joins;
};

inline UtcSeconds interarrival(UtcSeconds tweet_time, const GeoTemporalCluster& cluster) {
  return std::llabs(tweet_time - cluster.latest_time);
}

/// Returns the receiving cluster id, or nullopt for a tweet with no
/// locations (the state is left untouched).
inline std::optional<ClusterId> assign_st(SpatioTemporalState& state, const std::string& tweet_id,
                                          const std::vector<std::string>& locations, UtcSeconds created_at,
                                          double threshold, UtcSeconds iat_limit) {
  if (locations.empty()) return std::nullopt;
  const TermSet locs(locations.begin(), locations.end());

  std::optional<std::size_t> best;
  double best_sim = -1.0;
  UtcSeconds best_iat = 0;
  for (std::size_t j = 0; j < state.clusters.size(); ++j) {
    const auto iat = interarrival(created_at, state.clusters[j]);
    if (iat > iat_limit) continue;
    const double sim = jaccard_sim(locs, state.clusters[j].location_set);
    if (sim > best_sim) {
      best_sim = sim;
      best = j;
      best_iat = iat;
    }
  }

  if (best && best_sim >= threshold) {
    auto& c = state.clusters[*best];
    c.member_ids.push_back(tweet_id);
    c.location_set.insert(locs.begin(), locs.end());
    c.latest_time = std::max(c.latest_time, created_at);
    c.earliest_time = std::min(c.earliest_time, created_at);
    state.joins.push_back({tweet_id, c.id, best_iat, best_sim});
    return c.id;
  }

  GeoTemporalCluster fresh;
  fresh.id = static_cast<ClusterId>(state.clusters.size());
  fresh.member_ids.push_back(tweet_id);
  fresh.location_set = locs;
  fresh.earliest_time = created_at;
  fresh.latest_time = created_at;
  state.clusters.push_back(std::move(fresh));
  return state.clusters.back().id;
}

inline std::optional<ClusterId> assign_st(SpatioTemporalState& state, Tweet& tweet, double threshold,
                                          UtcSeconds iat_limit) {
  auto id = assign_st(state, tweet.id, tweet.locations, tweet.created_at, threshold, iat_limit);
  tweet.st_cluster = id;
  return id;
}

/// Indices of `tweets` in chronological order; equal timestamps keep input order.
inline std::vector<std::size_t> chronological_order(const std::vector<Tweet>& tweets) {
  std::vector<std::size_t> order(tweets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return tweets[a].created_at < tweets[b].created_at;
  });
  return order;
}

/// Streams `tweets` through assign_st in chronological order.
inline SpatioTemporalState cluster_spatiotemporal(std::vector<Tweet>& tweets, double threshold,
                                                  UtcSeconds iat_limit) {
  SpatioTemporalState state;
  for (auto i : chronological_order(tweets)) assign_st(state, tweets[i], threshold, iat_limit);
  return state;
}

/// Joins whose interarrival exceeded the limit. Empty for a correct run.
inline std::vector<StJoin> iat_violations(const SpatioTemporalState& state, UtcSeconds iat_limit) {
  std::vector<StJoin> bad;
  for (const auto& j : state.joins) {
    if (j.iat > iat_limit) bad.push_back(j);
  }
  return bad;
}

}  // namespace triage
