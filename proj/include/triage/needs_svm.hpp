#pragma once

// Six-way need classification: TF-IDF features, one binary RBF SVM per class
// pair, majority vote.

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "triage/error.hpp"
#include "triage/smo.hpp"
#include "triage/sparse.hpp"
#include "triage/textprep.hpp"
#include "triage/types.hpp"

namespace triage {

struct NeedsTrainingParams {
  double c = 1.0;
  double gamma = 0.01;
  double tol = 1e-3;
  int max_passes = 10;
  std::uint64_t seed = 42;
  bool l2_normalize = false;  // extension; off reproduces plain TF-IDF
};

struct PairwiseSvm {
  NeedLabel positive = NeedLabel::Rescue;  // decision >= 0 votes for this class
  NeedLabel negative = NeedLabel::Others;
  SvmBinaryModel model;
};

struct SvmMulticlassModel {
  std::vector<NeedLabel> classes;  // observed classes in NeedLabel order
  std::vector<PairwiseSvm> pairs;
  IdfTable idf;
  double gamma = 0.01;
  double c = 1.0;
  bool l2_normalize = false;

  bool trained() const { return classes.size() >= 2 && pairs.size() == classes.size() * (classes.size() - 1) / 2; }
};

/// Training inputs and solver output of one pairwise model, for auditing.
struct PairTrainingInfo {
  NeedLabel positive;
  NeedLabel negative;
  std::vector<SparseVector> xs;
  std::vector<int> ys;
  SmoResult result;
};

inline SparseVector needs_features(const TokenList& tokens, const IdfTable& idf, bool l2_normalize) {
  auto v = vectorize(tokens, idf);
  return l2_normalize ? l2_normalized(std::move(v)) : v;
}

inline SvmMulticlassModel train_needs_tokens(const std::vector<std::pair<TokenList, NeedLabel>>& docs,
                                             const NeedsTrainingParams& params,
                                             std::vector<PairTrainingInfo>* info = nullptr) {
  std::array<bool, kNeedCount> present{};
  for (const auto& [tokens, label] : docs) present[index_of(label)] = true;

  SvmMulticlassModel model;
  for (auto n : kNeedOrder) {
    if (present[index_of(n)]) model.classes.push_back(n);
  }
  if (model.classes.size() < 2) {
    throw Error(ErrorKind::Precondition, "need classifier requires at least two classes in the training data");
  }

  std::vector<TokenList> token_lists;
  token_lists.reserve(docs.size());
  for (const auto& d : docs) token_lists.push_back(d.first);
  model.idf = fit_idf(token_lists);
  model.gamma = params.gamma;
  model.c = params.c;
  model.l2_normalize = params.l2_normalize;

  std::vector<SparseVector> features;
  features.reserve(docs.size());
  for (const auto& d : docs) features.push_back(needs_features(d.first, model.idf, params.l2_normalize));

  std::uint64_t pair_index = 0;
  for (std::size_t a = 0; a < model.classes.size(); ++a) {
    for (std::size_t b = a + 1; b < model.classes.size(); ++b, ++pair_index) {
      PairTrainingInfo slice{model.classes[a], model.classes[b], {}, {}, {}};
      for (std::size_t i = 0; i < docs.size(); ++i) {
        if (docs[i].second == slice.positive) {
          slice.xs.push_back(features[i]);
          slice.ys.push_back(1);
        } else if (docs[i].second == slice.negative) {
          slice.xs.push_back(features[i]);
          slice.ys.push_back(-1);
        }
      }
      SmoParams smo{params.c, params.gamma, params.tol, params.max_passes, params.seed + pair_index};
      slice.result = train_smo(slice.xs, slice.ys, smo);
      model.pairs.push_back({slice.positive, slice.negative, slice.result.model});
      if (info) info->push_back(std::move(slice));
    }
  }
  return model;
}

/// Record labels are NeedLabel names (case-insensitive).
inline SvmMulticlassModel train_needs(const std::vector<TrainingRecord>& records, const StopwordList& stoplist,
                                      const NeedsTrainingParams& params,
                                      std::vector<PairTrainingInfo>* info = nullptr) {
  std::vector<std::pair<TokenList, NeedLabel>> docs;
  docs.reserve(records.size());
  for (const auto& r : records) {
    const auto label = parse_need(r.label);
    if (!label) throw Error(ErrorKind::Validation, "unknown need label: " + r.label);
    docs.emplace_back(preprocess(r.text, stoplist), *label);
  }
  return train_needs_tokens(docs, params, info);
}

struct NeedPrediction {
  NeedLabel label = NeedLabel::Others;
  std::array<int, kNeedCount> votes{};
  std::array<double, kNeedCount> margin{};  // summed |decision value| of won duels
};

/// Majority vote; ties go to the larger summed margin, then NeedLabel order.
inline NeedPrediction predict_need_detail(const SvmMulticlassModel& model, const TokenList& tokens) {
  if (!model.trained()) throw Error(ErrorKind::Precondition, "need classifier is not trained");
  const auto x = needs_features(tokens, model.idf, model.l2_normalize);
  NeedPrediction p;
  for (const auto& pair : model.pairs) {
    const double dv = decision_value(pair.model, x);
    const auto winner = dv >= 0.0 ? pair.positive : pair.negative;
    ++p.votes[index_of(winner)];
    p.margin[index_of(winner)] += std::abs(dv);
  }
  p.label = model.classes.front();
  for (auto n : model.classes) {
    const auto i = index_of(n);
    const auto b = index_of(p.label);
    if (p.votes[i] > p.votes[b] || (p.votes[i] == p.votes[b] && p.margin[i] > p.margin[b])) p.label = n;
  }
  return p;
}

inline NeedLabel predict_need(const SvmMulticlassModel& model, const TokenList& tokens) {
  return predict_need_detail(model, tokens).label;
}

}  // namespace triage
