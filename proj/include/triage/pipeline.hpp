#pragma once

// End-to-end orchestration:
//   preprocess -> relevance filter -> hashtags -> topic clustering ->
//   location tagging -> spatiotemporal clustering -> need classification ->
//   cluster labels.
// Unrelated tweets are counted and then dropped.

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "triage/config.hpp"
#include "triage/error.hpp"
#include "triage/eval.hpp"
#include "triage/geo_tagger.hpp"
#include "triage/needs_svm.hpp"
#include "triage/relevance_nb.hpp"
#include "triage/resources.hpp"
#include "triage/spatiotemporal.hpp"
#include "triage/textprep.hpp"
#include "triage/topic_incremental.hpp"
#include "triage/types.hpp"

namespace triage {

inline constexpr int kReportFormatVersion = 1;

using NeedCounts = std::array<long, kNeedCount>;

struct StageCounts {
  long input = 0;
  long related = 0;
  long unrelated = 0;
  long with_hashtags = 0;
  long located = 0;
  long unlocated = 0;
  long topic_clusters = 0;
  long st_clusters = 0;
  long st_filtered = 0;
};

struct TopicClusterReport {
  ClusterId id = 0;
  std::vector<std::string> label;
  std::vector<std::string> members;
  NeedCounts needs{};
};

struct StClusterReport {
  ClusterId id = 0;
  std::vector<std::string> locations;
  UtcSeconds first_time = 0;
  UtcSeconds last_time = 0;
  std::vector<std::string> members;
  NeedCounts needs{};
};

struct TweetReport {
  std::string id;
  ClusterId topic_cluster = 0;
  std::optional<ClusterId> st_cluster;
  NeedLabel need = NeedLabel::Others;
  std::vector<std::string> hashtags;
  std::vector<std::string> locations;
};

struct PipelineReport {
  PipelineConfig config;
  StageCounts counts;
  std::map<std::string, long> hashtags;
  std::vector<TopicClusterReport> topic_clusters;
  std::vector<StClusterReport> st_clusters;
  std::vector<std::string> unlocated;
  std::vector<std::string> st_filtered;  // members of clusters below st_min_cluster_size
  std::vector<TweetReport> tweets;       // related tweets in input order
  double svm_gamma = 0.0;
  double svm_c = 0.0;
};

struct PipelineResources {
  StopwordList stopwords;
  Gazetteer gazetteer;
};

/// Files named in the config, or the built-in lists when a path is empty.
inline PipelineResources load_resources(const PipelineConfig& config, std::vector<std::string>* warnings = nullptr) {
  PipelineResources r;
  r.stopwords = config.stopword_path.empty() ? default_stopwords() : load_stopwords(config.stopword_path);
  r.gazetteer = config.gazetteer_path.empty() ? default_gazetteer() : load_gazetteer(config.gazetteer_path, warnings);
  return r;
}

inline PipelineReport run_pipeline(const PipelineConfig& config, std::vector<Tweet> tweets, const NaiveBayesModel& nb,
                                   const SvmMulticlassModel& svm, const StopwordList& stopwords,
                                   const Gazetteer& gazetteer) {
  validate(config);
  if (!nb.trained()) throw Error(ErrorKind::Precondition, "relevance model is not trained");
  if (!svm.trained()) throw Error(ErrorKind::Precondition, "need model is not trained");

  PipelineReport report;
  report.config = config;
  report.svm_gamma = svm.gamma;
  report.svm_c = svm.c;
  report.counts.input = static_cast<long>(tweets.size());

  std::vector<Tweet> related;
  for (auto& t : tweets) {
    t.tokens = preprocess(t.text, stopwords);
    t.relevance = classify_relevance(nb, t.tokens).label;
    if (*t.relevance == Relevance::Related) related.push_back(std::move(t));
  }
  report.counts.related = static_cast<long>(related.size());
  report.counts.unrelated = report.counts.input - report.counts.related;

  for (auto& t : related) {
    t.hashtags = extract_hashtags(t.text);
    if (!t.hashtags.empty()) ++report.counts.with_hashtags;
    for (const auto& h : t.hashtags) ++report.hashtags[h];
  }

  TopicClusterState topics;
  for (auto& t : related) assign_topic(topics, t, config.topic_threshold);

  for (auto& t : related) tag_locations(t, gazetteer);

  const auto st = cluster_spatiotemporal(related, config.st_threshold, config.iat_limit);

  std::map<std::string, std::size_t> position;
  for (std::size_t i = 0; i < related.size(); ++i) {
    related[i].need = predict_need(svm, related[i].tokens);
    position[related[i].id] = i;
  }

  for (const auto& c : topics.clusters) {
    TopicClusterReport r{c.id, label_cluster(c, config.label_top_k), c.member_ids, {}};
    for (const auto& m : c.member_ids) ++r.needs[index_of(*related[position.at(m)].need)];
    report.topic_clusters.push_back(std::move(r));
  }

  const std::size_t min_size = std::max<std::size_t>(config.st_min_cluster_size, 1);
  for (const auto& c : st.clusters) {
    if (c.member_ids.size() < min_size) {
      for (const auto& m : c.member_ids) {
        report.st_filtered.push_back(m);
        related[position.at(m)].st_cluster.reset();
      }
      continue;
    }
    StClusterReport r{c.id, {c.location_set.begin(), c.location_set.end()}, c.earliest_time, c.latest_time,
                      c.member_ids, {}};
    for (const auto& m : c.member_ids) ++r.needs[index_of(*related[position.at(m)].need)];
    report.st_clusters.push_back(std::move(r));
  }

  for (const auto& t : related) {
    if (t.locations.empty()) report.unlocated.push_back(t.id);
    report.tweets.push_back({t.id, *t.topic_cluster, t.st_cluster, *t.need, t.hashtags, t.locations});
  }
  report.counts.unlocated = static_cast<long>(report.unlocated.size());
  report.counts.located = report.counts.related - report.counts.unlocated;
  report.counts.topic_clusters = static_cast<long>(report.topic_clusters.size());
  report.counts.st_clusters = static_cast<long>(report.st_clusters.size());
  report.counts.st_filtered = static_cast<long>(report.st_filtered.size());
  return report;
}

inline nlohmann::ordered_json needs_json(const NeedCounts& counts) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (auto n : kNeedOrder) j[to_string(n)] = counts[index_of(n)];
  return j;
}

/// Stable layout: identical reports serialize to identical bytes.
inline nlohmann::ordered_json to_json(const PipelineReport& r) {
  using ojson = nlohmann::ordered_json;
  ojson j;
  j["format_version"] = kReportFormatVersion;
  j["config"] = to_json(r.config);
  j["models"] = {{"svm_gamma", r.svm_gamma}, {"svm_c", r.svm_c}};
  j["counts"] = {{"input", r.counts.input},
                 {"related", r.counts.related},
                 {"unrelated", r.counts.unrelated},
                 {"with_hashtags", r.counts.with_hashtags},
                 {"located", r.counts.located},
                 {"unlocated", r.counts.unlocated},
                 {"topic_clusters", r.counts.topic_clusters},
                 {"st_clusters", r.counts.st_clusters},
                 {"st_filtered", r.counts.st_filtered}};

  std::vector<std::pair<std::string, long>> tags(r.hashtags.begin(), r.hashtags.end());
  std::stable_sort(tags.begin(), tags.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  ojson hashtags = ojson::array();
  for (const auto& [tag, n] : tags) hashtags.push_back({{"tag", tag}, {"count", n}});
  j["hashtags"] = std::move(hashtags);

  ojson topics = ojson::array();
  for (const auto& c : r.topic_clusters) {
    topics.push_back({{"id", c.id},
                      {"label", c.label},
                      {"size", c.members.size()},
                      {"members", c.members},
                      {"needs", needs_json(c.needs)}});
  }
  j["topic_clusters"] = std::move(topics);

  ojson st = ojson::array();
  for (const auto& c : r.st_clusters) {
    st.push_back({{"id", c.id},
                  {"locations", c.locations},
                  {"first_time", format_iso8601(c.first_time)},
                  {"last_time", format_iso8601(c.last_time)},
                  {"size", c.members.size()},
                  {"members", c.members},
                  {"needs", needs_json(c.needs)}});
  }
  j["st_clusters"] = std::move(st);
  j["unlocated"] = r.unlocated;
  j["st_filtered"] = r.st_filtered;

  ojson tweets = ojson::array();
  for (const auto& t : r.tweets) {
    tweets.push_back({{"id", t.id},
                      {"topic_cluster", t.topic_cluster},
                      {"st_cluster", t.st_cluster ? ojson(*t.st_cluster) : ojson(nullptr)},
                      {"need", to_string(t.need)},
                      {"hashtags", t.hashtags},
                      {"locations", t.locations}});
  }
  j["tweets"] = std::move(tweets);
  return j;
}

inline std::string report_to_string(const PipelineReport& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace triage
