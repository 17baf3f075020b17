#pragma once

// Parameter sweeps over a labeled evaluation corpus. Each value reruns the
// stage it controls on identical input; rows come out sorted by value with
// a final argmax row.

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "triage/error.hpp"
#include "triage/eval.hpp"
#include "triage/geo_tagger.hpp"
#include "triage/needs_svm.hpp"
#include "triage/spatiotemporal.hpp"
#include "triage/textprep.hpp"
#include "triage/topic_incremental.hpp"

namespace triage {

enum class SweepParam { TopicThreshold, StThreshold, Gamma };

inline std::optional<SweepParam> parse_sweep_param(const std::string& name) {
  if (name == "topic_threshold" || name == "topic-threshold") return SweepParam::TopicThreshold;
  if (name == "st_threshold" || name == "st-threshold") return SweepParam::StThreshold;
  if (name == "gamma") return SweepParam::Gamma;
  return std::nullopt;
}

struct ThresholdRow {
  double value = 0.0;
  PrfScore score;
  std::size_t clusters = 0;
};

inline constexpr std::size_t kSweepSplits = 3;

struct GammaRow {
  double gamma = 0.0;
  std::array<double, kSweepSplits> split_accuracy{};
  double overall = 0.0;  // mean of the split accuracies
};

namespace detail {

inline std::vector<double> sweep_values(std::vector<double> values) {
  if (values.empty()) throw Error(ErrorKind::Precondition, "sweep: empty value list");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

/// Tweets that carry a gold label, in corpus order.
inline std::vector<Tweet> labeled(const std::vector<Tweet>& tweets, const GoldLabels& gold) {
  std::vector<Tweet> out;
  for (const auto& t : tweets) {
    if (gold.count(t.id)) out.push_back(t);
  }
  if (out.empty()) throw Error(ErrorKind::Precondition, "sweep: no corpus tweet has a gold label");
  return out;
}

inline std::string fmt_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline std::string fmt_pct(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace detail

/// Incremental topic clustering of every gold-labeled tweet, per threshold.
inline std::vector<ThresholdRow> sweep_topic_threshold(const std::vector<double>& values,
                                                       const std::vector<Tweet>& tweets, const GoldLabels& gold,
                                                       const StopwordList& stopwords) {
  const auto grid = detail::sweep_values(values);
  auto corpus = detail::labeled(tweets, gold);
  for (auto& t : corpus) t.tokens = preprocess(t.text, stopwords);
  std::vector<ThresholdRow> rows;
  for (double v : grid) {
    TopicClusterState state;
    for (const auto& t : corpus) assign_topic(state, t.id, t.tokens, v);
    rows.push_back({v, cluster_prf(members_of(state.clusters), gold), state.n_clusters()});
  }
  return rows;
}

/// Spatiotemporal clustering per threshold. Only located tweets can be
/// clustered, so the gold set is narrowed to them.
inline std::vector<ThresholdRow> sweep_st_threshold(const std::vector<double>& values, const std::vector<Tweet>& tweets,
                                                    const GoldLabels& gold, const Gazetteer& gazetteer,
                                                    UtcSeconds iat_limit) {
  const auto grid = detail::sweep_values(values);
  auto corpus = detail::labeled(tweets, gold);
  GoldLabels located_gold;
  for (auto& t : corpus) {
    tag_locations(t, gazetteer);
    if (!t.locations.empty()) located_gold[t.id] = gold.at(t.id);
  }
  if (located_gold.empty()) throw Error(ErrorKind::Precondition, "sweep: no labeled tweet mentions a known location");
  std::vector<ThresholdRow> rows;
  for (double v : grid) {
    auto run = corpus;
    const auto state = cluster_spatiotemporal(run, v, iat_limit);
    ClusterMembers members;
    for (const auto& c : state.clusters) members[c.id] = c.member_ids;
    rows.push_back({v, cluster_prf(members, located_gold), state.clusters.size()});
  }
  return rows;
}

/// Three-way split by corpus position (i mod 3). Each split is scored by a
/// model trained on the other two.
inline std::vector<GammaRow> sweep_gamma(const std::vector<double>& values, const std::vector<Tweet>& tweets,
                                         const GoldLabels& gold, const StopwordList& stopwords,
                                         const NeedsTrainingParams& base) {
  const auto grid = detail::sweep_values(values);
  const auto corpus = detail::labeled(tweets, gold);
  if (corpus.size() < kSweepSplits) throw Error(ErrorKind::Precondition, "sweep: fewer labeled tweets than splits");

  std::vector<std::pair<TokenList, NeedLabel>> docs;
  for (const auto& t : corpus) {
    const auto label = parse_need(gold.at(t.id));
    if (!label) throw Error(ErrorKind::Validation, "sweep: gold label is not a need: " + gold.at(t.id));
    docs.emplace_back(preprocess(t.text, stopwords), *label);
  }

  std::vector<GammaRow> rows;
  for (double g : grid) {
    if (!(g > 0.0)) throw Error(ErrorKind::Precondition, "sweep: gamma values must be positive");
    GammaRow row;
    row.gamma = g;
    auto params = base;
    params.gamma = g;
    for (std::size_t split = 0; split < kSweepSplits; ++split) {
      std::vector<std::pair<TokenList, NeedLabel>> train;
      std::vector<NeedLabel> gold_split;
      std::vector<NeedLabel> predicted;
      for (std::size_t i = 0; i < docs.size(); ++i) {
        if (i % kSweepSplits != split) train.push_back(docs[i]);
      }
      const auto model = train_needs_tokens(train, params);
      for (std::size_t i = split; i < docs.size(); i += kSweepSplits) {
        gold_split.push_back(docs[i].second);
        predicted.push_back(predict_need(model, docs[i].first));
      }
      row.split_accuracy[split] = accuracy(predicted, gold_split);
      row.overall += row.split_accuracy[split] / static_cast<double>(kSweepSplits);
    }
    rows.push_back(row);
  }
  return rows;
}

/// Best row by F-measure; ties keep the smallest value.
inline std::size_t argmax_row(const std::vector<ThresholdRow>& rows) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].score.f_measure > rows[best].score.f_measure) best = i;
  }
  return best;
}

inline std::size_t argmax_row(const std::vector<GammaRow>& rows) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].overall > rows[best].overall) best = i;
  }
  return best;
}

/// `row,<param>,precision,recall,f_measure,clusters`; data rows are tagged
/// `value`, the best row is repeated with tag `argmax`.
inline std::string threshold_table_csv(const std::string& param, const std::vector<ThresholdRow>& rows) {
  std::ostringstream out;
  out << "row," << param << ",precision,recall,f_measure,clusters\n";
  auto line = [&](const char* tag, const ThresholdRow& r) {
    out << tag << ',' << detail::fmt_value(r.value) << ',' << detail::fmt_pct(r.score.precision) << ','
        << detail::fmt_pct(r.score.recall) << ',' << detail::fmt_pct(r.score.f_measure) << ',' << r.clusters << '\n';
  };
  for (const auto& r : rows) line("value", r);
  if (!rows.empty()) line("argmax", rows[argmax_row(rows)]);
  return out.str();
}

inline std::string gamma_table_csv(const std::vector<GammaRow>& rows) {
  std::ostringstream out;
  out << "row,gamma";
  for (std::size_t s = 1; s <= kSweepSplits; ++s) out << ",test_" << s << "_accuracy";
  out << ",overall_accuracy\n";
  auto line = [&](const char* tag, const GammaRow& r) {
    out << tag << ',' << detail::fmt_value(r.gamma);
    for (double a : r.split_accuracy) out << ',' << detail::fmt_pct(a);
    out << ',' << detail::fmt_pct(r.overall) << '\n';
  };
  for (const auto& r : rows) line("value", r);
  if (!rows.empty()) line("argmax", rows[argmax_row(rows)]);
  return out.str();
}

}  // namespace triage
