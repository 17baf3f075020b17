#pragma once

#include <cstdint>
#include <fstream>
#include <string>

#include <json.hpp>

#include "triage/error.hpp"
#include "triage/spatiotemporal.hpp"
#include "triage/timeutil.hpp"

namespace triage {

struct PipelineConfig {
  double topic_threshold = 0.01;
  double st_threshold = 0.8;
  UtcSeconds iat_limit = kDefaultIatLimit;
  double gamma = 0.01;
  double svm_c = 1.0;
  double smo_tolerance = 1e-3;
  int smo_max_passes = 10;
  std::uint64_t svm_seed = 42;
  bool svm_l2_normalize = false;
  std::size_t label_top_k = 5;
  std::size_t st_min_cluster_size = 0;  // 0 or 1 disables the report filter
  std::string stopword_path;            // empty selects the built-in list
  std::string gazetteer_path;           // empty selects the built-in list
};

inline void validate(const PipelineConfig& c) {
  auto fail = [](const std::string& msg) { throw Error(ErrorKind::Validation, "config: " + msg); };
  if (!(c.topic_threshold >= 0.0)) fail("topic_threshold must be >= 0");
  if (!(c.st_threshold >= 0.0 && c.st_threshold <= 1.0)) fail("st_threshold must lie in [0, 1]");
  if (c.iat_limit <= 0) fail("iat_limit_seconds must be > 0");
  if (!(c.gamma > 0.0)) fail("gamma must be > 0");
  if (!(c.svm_c > 0.0)) fail("svm_c must be > 0");
  if (!(c.smo_tolerance > 0.0)) fail("smo_tolerance must be > 0");
  if (c.smo_max_passes < 1) fail("smo_max_passes must be >= 1");
  if (c.label_top_k < 1) fail("label_top_k must be >= 1");
}

inline nlohmann::ordered_json to_json(const PipelineConfig& c) {
  nlohmann::ordered_json j;
  j["topic_threshold"] = c.topic_threshold;
  j["st_threshold"] = c.st_threshold;
  j["iat_limit_seconds"] = c.iat_limit;
  j["gamma"] = c.gamma;
  j["svm_c"] = c.svm_c;
  j["smo_tolerance"] = c.smo_tolerance;
  j["smo_max_passes"] = c.smo_max_passes;
  j["svm_seed"] = c.svm_seed;
  j["svm_l2_normalize"] = c.svm_l2_normalize;
  j["label_top_k"] = c.label_top_k;
  j["st_min_cluster_size"] = c.st_min_cluster_size;
  j["stopword_path"] = c.stopword_path;
  j["gazetteer_path"] = c.gazetteer_path;
  return j;
}

/// Missing keys keep their defaults; unknown keys are rejected.
inline PipelineConfig config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::Parse, "config: expected a JSON object");
  PipelineConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "topic_threshold") c.topic_threshold = value.get<double>();
      else if (key == "st_threshold") c.st_threshold = value.get<double>();
      else if (key == "iat_limit_seconds") c.iat_limit = value.get<UtcSeconds>();
      else if (key == "iat_limit_days") c.iat_limit = static_cast<UtcSeconds>(value.get<double>() * kSecondsPerDay);
      else if (key == "gamma") c.gamma = value.get<double>();
      else if (key == "svm_c") c.svm_c = value.get<double>();
      else if (key == "smo_tolerance") c.smo_tolerance = value.get<double>();
      else if (key == "smo_max_passes") c.smo_max_passes = value.get<int>();
      else if (key == "svm_seed") c.svm_seed = value.get<std::uint64_t>();
      else if (key == "svm_l2_normalize") c.svm_l2_normalize = value.get<bool>();
      else if (key == "label_top_k") c.label_top_k = value.get<std::size_t>();
      else if (key == "st_min_cluster_size") c.st_min_cluster_size = value.get<std::size_t>();
      else if (key == "stopword_path") c.stopword_path = value.get<std::string>();
      else if (key == "gazetteer_path") c.gazetteer_path = value.get<std::string>();
      else throw Error(ErrorKind::Validation, "config: unknown key '" + key + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("config: ") + e.what());
  }
  validate(c);
  return c;
}

inline PipelineConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace triage
