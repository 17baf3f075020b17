#pragma once

// Model files: pretty-printed JSON carrying a format version. Doubles are
// written with round-trip precision so reloaded models decide identically.

#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "triage/error.hpp"
#include "triage/needs_svm.hpp"
#include "triage/relevance_nb.hpp"

namespace triage {

inline constexpr int kModelFormatVersion = 1;

using json = nlohmann::ordered_json;

inline json to_json(const NaiveBayesModel& m) {
  json j;
  j["classes"] = m.classes;
  j["prior_count"] = m.prior_count;
  j["total_terms"] = m.total_terms;
  json counts = json::array();
  for (const auto& per_class : m.term_count) {
    json obj = json::object();
    for (const auto& [term, n] : per_class) obj[term] = n;
    counts.push_back(std::move(obj));
  }
  j["term_count"] = std::move(counts);
  return j;
}

inline json to_json(const SparseVector& v) {
  json arr = json::array();
  for (const auto& e : v.entries) arr.push_back(json::array({e.index, e.value}));
  return arr;
}

inline json to_json(const SvmMulticlassModel& m) {
  json j;
  j["gamma"] = m.gamma;
  j["c"] = m.c;
  j["l2_normalize"] = m.l2_normalize;
  json classes = json::array();
  for (auto n : m.classes) classes.push_back(to_string(n));
  j["classes"] = std::move(classes);
  j["idf"] = {{"n_docs", m.idf.n_docs},
              {"terms", m.idf.terms},
              {"doc_freq", m.idf.doc_freq},
              {"idf", m.idf.idf}};
  json pairs = json::array();
  for (const auto& p : m.pairs) {
    json sv = json::array();
    for (const auto& v : p.model.support_vectors) sv.push_back(to_json(v));
    pairs.push_back({{"positive", to_string(p.positive)},
                     {"negative", to_string(p.negative)},
                     {"bias", p.model.bias},
                     {"gamma", p.model.gamma},
                     {"coeffs", p.model.coeffs},
                     {"support_vectors", std::move(sv)}});
  }
  j["pairs"] = std::move(pairs);
  return j;
}

namespace detail {

[[noreturn]] inline void corrupt(const std::string& what) {
  throw Error(ErrorKind::Corrupt, "corrupt model file: " + what);
}

inline NeedLabel need_from_json(const nlohmann::json& j) {
  const auto n = parse_need(j.get<std::string>());
  if (!n) corrupt("unknown need label " + j.dump());
  return *n;
}

inline NaiveBayesModel nb_from_json(const nlohmann::json& j) {
  NaiveBayesModel m;
  m.classes = j.at("classes").get<std::vector<std::string>>();
  m.prior_count = j.at("prior_count").get<std::vector<std::uint64_t>>();
  m.total_terms = j.at("total_terms").get<std::vector<std::uint64_t>>();
  const auto& counts = j.at("term_count");
  const auto k = m.classes.size();
  if (k == 0 || m.prior_count.size() != k || m.total_terms.size() != k || !counts.is_array() || counts.size() != k) {
    corrupt("naive bayes class tables disagree in size");
  }
  m.term_count.resize(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::uint64_t total = 0;
    for (const auto& [term, n] : counts[c].items()) {
      const auto count = n.get<std::uint64_t>();
      m.term_count[c][term] = count;
      total += count;
      if (count > 0) m.vocabulary.insert(term);
    }
    if (total != m.total_terms[c]) corrupt("naive bayes term totals do not match counts");
  }
  return m;
}

inline SparseVector sparse_from_json(const nlohmann::json& j, std::size_t dim) {
  SparseVector v;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) corrupt("bad sparse entry");
    const auto index = e[0].get<std::uint32_t>();
    if (index >= dim || (!v.entries.empty() && index <= v.entries.back().index)) corrupt("bad sparse index");
    v.entries.push_back({index, e[1].get<double>()});
  }
  return v;
}

inline SvmMulticlassModel svm_from_json(const nlohmann::json& j) {
  SvmMulticlassModel m;
  m.gamma = j.at("gamma").get<double>();
  m.c = j.at("c").get<double>();
  m.l2_normalize = j.at("l2_normalize").get<bool>();
  for (const auto& n : j.at("classes")) m.classes.push_back(need_from_json(n));
  const auto& idf = j.at("idf");
  m.idf.n_docs = idf.at("n_docs").get<std::uint64_t>();
  m.idf.terms = idf.at("terms").get<std::vector<std::string>>();
  m.idf.doc_freq = idf.at("doc_freq").get<std::vector<std::uint64_t>>();
  m.idf.idf = idf.at("idf").get<std::vector<double>>();
  if (m.idf.doc_freq.size() != m.idf.terms.size() || m.idf.idf.size() != m.idf.terms.size()) {
    corrupt("idf table columns disagree in size");
  }
  for (std::size_t i = 0; i < m.idf.terms.size(); ++i) {
    if (!m.idf.index.emplace(m.idf.terms[i], static_cast<std::uint32_t>(i)).second) corrupt("duplicate idf term");
  }
  for (const auto& p : j.at("pairs")) {
    PairwiseSvm pair;
    pair.positive = need_from_json(p.at("positive"));
    pair.negative = need_from_json(p.at("negative"));
    pair.model.bias = p.at("bias").get<double>();
    pair.model.gamma = p.at("gamma").get<double>();
    pair.model.coeffs = p.at("coeffs").get<std::vector<double>>();
    for (const auto& sv : p.at("support_vectors")) {
      pair.model.support_vectors.push_back(sparse_from_json(sv, m.idf.terms.size()));
    }
    if (pair.model.coeffs.size() != pair.model.support_vectors.size()) corrupt("coefficient count mismatch");
    m.pairs.push_back(std::move(pair));
  }
  if (!m.trained()) corrupt("pairwise model count does not match class count");
  return m;
}

inline nlohmann::json read_model_json(const std::string& path, const std::string& expected_kind) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open model file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::exception&) {
    corrupt(path + " is not valid JSON");
  }
  if (!j.is_object() || !j.contains("format_version") || !j.contains("kind")) corrupt(path + " lacks a header");
  if (!j["format_version"].is_number_integer() || j["format_version"].get<int>() != kModelFormatVersion) {
    throw Error(ErrorKind::Version, path + ": unsupported model format version " + j["format_version"].dump());
  }
  if (j["kind"] != expected_kind) corrupt(path + " holds a '" + j["kind"].dump() + "' model");
  return j;
}

template <typename Fn>
auto decode_model(const std::string& path, Fn&& fn) {
  try {
    return fn();
  } catch (const nlohmann::json::exception& e) {
    corrupt(path + ": " + e.what());
  }
}

inline void write_json(const std::string& path, const json& j) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
  out << j.dump(2) << '\n';
  if (!out) throw Error(ErrorKind::Io, "write failed: " + path);
}

inline json header(const char* kind) {
  json j;
  j["format_version"] = kModelFormatVersion;
  j["kind"] = kind;
  return j;
}

}  // namespace detail

inline void save_nb(const NaiveBayesModel& nb, const std::string& path) {
  auto j = detail::header("naive_bayes");
  j["model"] = to_json(nb);
  detail::write_json(path, j);
}

inline NaiveBayesModel load_nb(const std::string& path) {
  const auto j = detail::read_model_json(path, "naive_bayes");
  return detail::decode_model(path, [&] { return detail::nb_from_json(j.at("model")); });
}

inline void save_svm(const SvmMulticlassModel& svm, const std::string& path) {
  auto j = detail::header("svm_multiclass");
  j["model"] = to_json(svm);
  detail::write_json(path, j);
}

inline SvmMulticlassModel load_svm(const std::string& path) {
  const auto j = detail::read_model_json(path, "svm_multiclass");
  return detail::decode_model(path, [&] { return detail::svm_from_json(j.at("model")); });
}

/// Both models in one file.
inline void save_models(const NaiveBayesModel& nb, const SvmMulticlassModel& svm, const std::string& path) {
  auto j = detail::header("model_bundle");
  j["naive_bayes"] = to_json(nb);
  j["svm_multiclass"] = to_json(svm);
  detail::write_json(path, j);
}

inline std::pair<NaiveBayesModel, SvmMulticlassModel> load_models(const std::string& path) {
  const auto j = detail::read_model_json(path, "model_bundle");
  return detail::decode_model(path, [&] {
    return std::make_pair(detail::nb_from_json(j.at("naive_bayes")), detail::svm_from_json(j.at("svm_multiclass")));
  });
}

}  // namespace triage
