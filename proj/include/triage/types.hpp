#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "triage/error.hpp"
#include "triage/timeutil.hpp"
#include "triage/unicode.hpp"

namespace triage {

using ClusterId = int;

enum class Relevance { Related, Unrelated };

inline constexpr std::array<Relevance, 2> kRelevanceOrder{Relevance::Related, Relevance::Unrelated};

inline const char* to_string(Relevance r) {
  return r == Relevance::Related ? "Related" : "Unrelated";
}

inline std::optional<Relevance> parse_relevance(std::string_view name) {
  const auto lower = unicode::to_lower(name);
  if (lower == "related") return Relevance::Related;
  if (lower == "unrelated") return Relevance::Unrelated;
  return std::nullopt;
}

/// Actionable need expressed by a disaster tweet. Enumerator order is the
/// canonical class order used for tie-breaking and model layout.
enum class NeedLabel { Rescue, Relief, Shelter, Cash, Prayer, Others };

inline constexpr std::size_t kNeedCount = 6;
inline constexpr std::array<NeedLabel, kNeedCount> kNeedOrder{
    NeedLabel::Rescue, NeedLabel::Relief, NeedLabel::Shelter,
    NeedLabel::Cash,   NeedLabel::Prayer, NeedLabel::Others};

inline const char* to_string(NeedLabel n) {
  switch (n) {
    case NeedLabel::Rescue: return "Rescue";
    case NeedLabel::Relief: return "Relief";
    case NeedLabel::Shelter: return "Shelter";
    case NeedLabel::Cash: return "Cash";
    case NeedLabel::Prayer: return "Prayer";
    case NeedLabel::Others: return "Others";
  }
  return "Others";
}

inline std::size_t index_of(NeedLabel n) { return static_cast<std::size_t>(n); }

/// Case-insensitive. "Prayers" is accepted as an alias for Prayer.
inline std::optional<NeedLabel> parse_need(std::string_view name) {
  const auto lower = unicode::to_lower(name);
  for (auto n : kNeedOrder) {
    if (lower == unicode::to_lower(to_string(n))) return n;
  }
  if (lower == "prayers") return NeedLabel::Prayer;
  return std::nullopt;
}

struct Tweet {
  std::string id;
  std::string text;
  UtcSeconds created_at = 0;

  // Filled in by the pipeline stages, empty until the producing stage runs.
  std::vector<std::string> tokens;
  std::vector<std::string> hashtags;
  std::vector<std::string> locations;
  std::optional<Relevance> relevance;
  std::optional<NeedLabel> need;
  std::optional<ClusterId> topic_cluster;
  std::optional<ClusterId> st_cluster;
};

struct TrainingRecord {
  std::string text;
  std::string label;
};

}  // namespace triage
