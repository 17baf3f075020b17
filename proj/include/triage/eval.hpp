#pragma once

// Precision / recall / F-measure, accuracy, cluster-majority scoring and
// cluster labels. All scores are percentages kept at full precision.

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "triage/error.hpp"
#include "triage/topic_incremental.hpp"

namespace triage {

struct PrfScore {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  bool zero_denominator = false;  // some ratio fell back to the 0 convention
};

/// Harmonic mean 2pr/(p+r) of two percentages, 0 when both are 0.
inline double f_measure(double p, double r) {
  if (p + r == 0.0) return 0.0;
  return 2.0 * p * r / (p + r);
}

template <typename Label>
PrfScore classifier_prf(const std::vector<Label>& predictions, const std::vector<Label>& gold,
                        const Label& positive) {
  if (predictions.size() != gold.size()) {
    throw Error(ErrorKind::Precondition, "classifier_prf: prediction and gold lengths differ");
  }
  long tp = 0, fp = 0, fn = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool pred_pos = predictions[i] == positive;
    const bool gold_pos = gold[i] == positive;
    if (pred_pos && gold_pos) ++tp;
    else if (pred_pos) ++fp;
    else if (gold_pos) ++fn;
  }
  PrfScore s;
  if (tp + fp > 0) s.precision = 100.0 * tp / static_cast<double>(tp + fp);
  else s.zero_denominator = true;
  if (tp + fn > 0) s.recall = 100.0 * tp / static_cast<double>(tp + fn);
  else s.zero_denominator = true;
  s.f_measure = f_measure(s.precision, s.recall);
  return s;
}

template <typename Label>
double accuracy(const std::vector<Label>& predictions, const std::vector<Label>& gold) {
  if (predictions.size() != gold.size()) {
    throw Error(ErrorKind::Precondition, "accuracy: prediction and gold lengths differ");
  }
  if (gold.empty()) throw Error(ErrorKind::Precondition, "accuracy: empty input");
  long correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) correct += predictions[i] == gold[i] ? 1 : 0;
  return 100.0 * correct / static_cast<double>(gold.size());
}

using ClusterMembers = std::map<ClusterId, std::vector<std::string>>;
using GoldLabels = std::map<std::string, std::string>;

struct ClusterScore {
  ClusterId cluster = 0;
  std::string majority;
  PrfScore score;
};

/// Per-cluster scores: each cluster is mapped to its most frequent gold
/// class (ties to the lexicographically smallest name); recall is measured
/// against every gold tweet of that class.
inline std::vector<ClusterScore> cluster_scores(const ClusterMembers& clusters, const GoldLabels& gold) {
  std::map<std::string, long> class_totals;
  for (const auto& [id, label] : gold) ++class_totals[label];

  std::vector<ClusterScore> out;
  for (const auto& [cid, members] : clusters) {
    ClusterScore cs;
    cs.cluster = cid;
    if (members.empty()) {
      cs.score.zero_denominator = true;
      out.push_back(cs);
      continue;
    }
    std::map<std::string, long> counts;
    for (const auto& m : members) {
      const auto it = gold.find(m);
      if (it == gold.end()) throw Error(ErrorKind::Precondition, "cluster member without gold class: " + m);
      ++counts[it->second];
    }
    long best = -1;
    for (const auto& [label, n] : counts) {
      if (n > best) {
        best = n;
        cs.majority = label;
      }
    }
    cs.score.precision = 100.0 * best / static_cast<double>(members.size());
    cs.score.recall = 100.0 * best / static_cast<double>(class_totals[cs.majority]);
    cs.score.f_measure = f_measure(cs.score.precision, cs.score.recall);
    out.push_back(cs);
  }
  return out;
}

/// Unweighted mean of the per-cluster precision, recall and F-measure.
inline PrfScore cluster_prf(const ClusterMembers& clusters, const GoldLabels& gold) {
  if (clusters.empty()) throw Error(ErrorKind::Precondition, "cluster_prf: no clusters");
  PrfScore mean;
  const auto per = cluster_scores(clusters, gold);
  for (const auto& cs : per) {
    mean.precision += cs.score.precision;
    mean.recall += cs.score.recall;
    mean.f_measure += cs.score.f_measure;
    mean.zero_denominator = mean.zero_denominator || cs.score.zero_denominator;
  }
  const auto n = static_cast<double>(per.size());
  mean.precision /= n;
  mean.recall /= n;
  mean.f_measure /= n;
  return mean;
}

inline ClusterMembers members_of(const std::vector<TopicCluster>& clusters) {
  ClusterMembers out;
  for (const auto& c : clusters) out[c.id] = c.member_ids;
  return out;
}

/// The k most frequent terms, ordered by (-frequency, term).
inline std::vector<std::string> label_cluster(const std::map<std::string, long>& term_freq, std::size_t k) {
  std::vector<std::pair<std::string, long>> ranked(term_freq.begin(), term_freq.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < ranked.size() && i < k; ++i) out.push_back(ranked[i].first);
  return out;
}

inline std::vector<std::string> label_cluster(const TopicCluster& cluster, std::size_t k) {
  return label_cluster(cluster.term_freq, k);
}

}  // namespace triage
