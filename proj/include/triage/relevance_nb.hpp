#pragma once

// Multinomial Naive Bayes with Laplace add-one smoothing, scored in log space.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "triage/error.hpp"
#include "triage/textprep.hpp"
#include "triage/types.hpp"
#include "triage/unicode.hpp"

namespace triage {

struct NaiveBayesModel {
  std::vector<std::string> classes;
  std::vector<std::uint64_t> prior_count;
  std::vector<std::map<std::string, std::uint64_t>> term_count;
  std::vector<std::uint64_t> total_terms;
  std::set<std::string> vocabulary;

  std::uint64_t n_records() const {
    std::uint64_t n = 0;
    for (auto c : prior_count) n += c;
    return n;
  }

  bool trained() const { return !classes.empty() && n_records() > 0; }
};

inline std::vector<std::string> relevance_classes() {
  return {to_string(Relevance::Related), to_string(Relevance::Unrelated)};
}

/// Case-insensitive lookup. Throws Precondition for an unknown class.
inline std::size_t class_index(const NaiveBayesModel& model, std::string_view name) {
  const auto wanted = unicode::to_lower(name);
  for (std::size_t i = 0; i < model.classes.size(); ++i) {
    if (unicode::to_lower(model.classes[i]) == wanted) return i;
  }
  throw Error(ErrorKind::Precondition, "unknown class: " + std::string(name));
}

/// Builds a model from already-preprocessed documents.
inline NaiveBayesModel train_nb_tokens(const std::vector<std::pair<TokenList, std::size_t>>& docs,
                                       std::vector<std::string> classes) {
  if (classes.empty()) throw Error(ErrorKind::Precondition, "naive bayes needs at least one class");
  NaiveBayesModel model;
  model.classes = std::move(classes);
  const auto k = model.classes.size();
  model.prior_count.assign(k, 0);
  model.term_count.assign(k, {});
  model.total_terms.assign(k, 0);
  for (const auto& [tokens, cls] : docs) {
    if (cls >= k) throw Error(ErrorKind::Precondition, "class index out of range");
    ++model.prior_count[cls];
    for (const auto& t : tokens) {
      ++model.term_count[cls][t];
      ++model.total_terms[cls];
      model.vocabulary.insert(t);
    }
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (model.prior_count[c] == 0) {
      throw Error(ErrorKind::Precondition, "no training records for class " + model.classes[c]);
    }
  }
  return model;
}

inline NaiveBayesModel train_nb(const std::vector<TrainingRecord>& records, const StopwordList& stoplist,
                                std::vector<std::string> classes = relevance_classes()) {
  NaiveBayesModel shape;
  shape.classes = classes;
  std::vector<std::pair<TokenList, std::size_t>> docs;
  docs.reserve(records.size());
  for (const auto& r : records) {
    docs.emplace_back(preprocess(r.text, stoplist), class_index(shape, r.label));
  }
  return train_nb_tokens(docs, std::move(classes));
}

/// ln P(c) + sum over in-vocabulary tokens of ln P(t | c). P(X) is omitted.
inline double log_posterior(const NaiveBayesModel& model, const TokenList& tokens, std::size_t cls) {
  if (cls >= model.classes.size()) throw Error(ErrorKind::Precondition, "unknown class index");
  const double n = static_cast<double>(model.n_records());
  double score = std::log(static_cast<double>(model.prior_count[cls]) / n);
  const double denom =
      static_cast<double>(model.total_terms[cls]) + static_cast<double>(model.vocabulary.size());
  const auto& counts = model.term_count[cls];
  for (const auto& t : tokens) {
    if (!model.vocabulary.count(t)) continue;
    const auto it = counts.find(t);
    const double count = it == counts.end() ? 0.0 : static_cast<double>(it->second);
    score += std::log((count + 1.0) / denom);
  }
  return score;
}

inline double log_posterior(const NaiveBayesModel& model, const TokenList& tokens, std::string_view cls) {
  return log_posterior(model, tokens, class_index(model, cls));
}

struct NbDecision {
  std::size_t best = 0;
  std::vector<double> scores;
};

// Scores this close are the same real number reached by different rounding.
inline constexpr double kNbTieTolerance = 1e-12;

/// Argmax over classes; ties go to the earlier class.
inline NbDecision classify_nb(const NaiveBayesModel& model, const TokenList& tokens) {
  if (!model.trained()) throw Error(ErrorKind::Precondition, "naive bayes model is not trained");
  NbDecision d;
  d.scores.reserve(model.classes.size());
  for (std::size_t c = 0; c < model.classes.size(); ++c) {
    d.scores.push_back(log_posterior(model, tokens, c));
  }
  for (std::size_t c = 1; c < d.scores.size(); ++c) {
    const double margin = kNbTieTolerance * std::max(1.0, std::abs(d.scores[d.best]));
    if (d.scores[c] > d.scores[d.best] + margin) d.best = c;
  }
  return d;
}

struct RelevanceDecision {
  Relevance label = Relevance::Related;
  std::vector<double> scores;  // indexed like the model's classes
};

inline RelevanceDecision classify_relevance(const NaiveBayesModel& model, const TokenList& tokens) {
  auto d = classify_nb(model, tokens);
  const auto parsed = parse_relevance(model.classes[d.best]);
  if (!parsed) throw Error(ErrorKind::Precondition, "model classes are not relevance labels");
  return {*parsed, std::move(d.scores)};
}

/// Normalized posteriors from log-joint scores.
inline std::vector<double> posterior_probabilities(const std::vector<double>& log_scores) {
  std::vector<double> out(log_scores.size());
  if (log_scores.empty()) return out;
  double top = log_scores.front();
  for (double s : log_scores) top = std::max(top, s);
  double sum = 0.0;
  for (std::size_t i = 0; i < log_scores.size(); ++i) {
    out[i] = std::exp(log_scores[i] - top);
    sum += out[i];
  }
  for (auto& p : out) p /= sum;
  return out;
}

}  // namespace triage
