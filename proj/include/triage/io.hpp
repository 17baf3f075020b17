#pragma once

// JSON-Lines ingestion: corpora, training records and id/label files.

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "triage/error.hpp"
#include "triage/timeutil.hpp"
#include "triage/types.hpp"

namespace triage {

namespace detail {

template <typename Fn>
void for_each_jsonl(const std::string& path, Fn&& fn) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(line_no) + ": invalid JSON");
    }
    if (!j.is_object()) {
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(line_no) + ": expected a JSON object");
    }
    fn(j, line_no);
  }
}

inline std::string string_field(const nlohmann::json& j, const char* name, const std::string& path,
                                std::size_t line_no) {
  const auto it = j.find(name);
  if (it == j.end() || !it->is_string()) {
    throw Error(ErrorKind::Parse, path + ":" + std::to_string(line_no) + ": missing string field '" + name + "'");
  }
  return it->get<std::string>();
}

}  // namespace detail

/// One `{"id", "text", "created_at"}` object per line, returned in file
/// order. Blank lines are skipped.
inline std::vector<Tweet> load_tweets(const std::string& path) {
  std::vector<Tweet> tweets;
  std::set<std::string> ids;
  detail::for_each_jsonl(path, [&](const nlohmann::json& j, std::size_t line_no) {
    Tweet t;
    t.id = detail::string_field(j, "id", path, line_no);
    t.text = detail::string_field(j, "text", path, line_no);
    const auto stamp = detail::string_field(j, "created_at", path, line_no);
    const auto where = path + ":" + std::to_string(line_no) + ": ";
    if (t.id.empty()) throw Error(ErrorKind::Validation, where + "empty id");
    const auto parsed = parse_iso8601(stamp);
    if (!parsed) throw Error(ErrorKind::Parse, where + "unparseable timestamp '" + stamp + "'");
    t.created_at = *parsed;
    if (!ids.insert(t.id).second) throw Error(ErrorKind::Validation, where + "duplicate id '" + t.id + "'");
    tweets.push_back(std::move(t));
  });
  return tweets;
}

/// One `{"text", "label"}` object per line.
inline std::vector<TrainingRecord> load_training(const std::string& path) {
  std::vector<TrainingRecord> records;
  detail::for_each_jsonl(path, [&](const nlohmann::json& j, std::size_t line_no) {
    records.push_back({detail::string_field(j, "text", path, line_no),
                       detail::string_field(j, "label", path, line_no)});
  });
  return records;
}

/// One `{"id", "label"}` object per line; used for gold and prediction files.
inline std::map<std::string, std::string> load_labels(const std::string& path) {
  std::map<std::string, std::string> labels;
  detail::for_each_jsonl(path, [&](const nlohmann::json& j, std::size_t line_no) {
    auto id = detail::string_field(j, "id", path, line_no);
    auto label = detail::string_field(j, "label", path, line_no);
    if (!labels.emplace(id, std::move(label)).second) {
      throw Error(ErrorKind::Validation, path + ":" + std::to_string(line_no) + ": duplicate id '" + id + "'");
    }
  });
  return labels;
}

}  // namespace triage
