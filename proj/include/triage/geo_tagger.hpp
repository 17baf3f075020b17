#pragma once

// Dictionary-based location tagging. Names and text are compared as
// sequences of lowercase word tokens, so matching ignores case, spacing and
// punctuation between words.

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "triage/error.hpp"
#include "triage/textprep.hpp"
#include "triage/types.hpp"
#include "triage/unicode.hpp"

namespace triage {

namespace detail {

/// Lowercase word tokens of `text` with URLs removed. Mentions are kept
/// since handles often carry place names.
inline std::vector<std::string> location_words(std::string_view text) {
  const std::string s = unicode::to_lower(text);
  std::vector<std::string> words;
  std::string current;
  for (std::size_t pos = 0; pos < s.size();) {
    if (current.empty() && starts_with_url(s, pos)) {
      pos = skip_to_space(s, pos);
      continue;
    }
    const auto [cp, next] = unicode::decode_at(s, pos);
    if (unicode::is_word_char(cp)) {
      current.append(s, pos, next - pos);
    } else if (!current.empty()) {
      words.push_back(std::move(current));
      current.clear();
    }
    pos = next;
  }
  if (!current.empty()) words.push_back(std::move(current));
  return words;
}

inline std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) {
    if (!out.empty()) out.push_back(' ');
    out += w;
  }
  return out;
}

}  // namespace detail

class Gazetteer {
 public:
  Gazetteer() = default;

  Gazetteer(std::initializer_list<std::string_view> names) {
    for (auto n : names) add(n);
  }

  /// Returns false when the name collapses onto an existing entry or is empty.
  bool add(std::string_view name) {
    const auto canonical = unicode::normalize_space(name);
    auto words = detail::location_words(canonical);
    if (words.empty()) return false;
    auto key = detail::join_words(words);
    if (lookup_.count(key)) return false;
    lookup_.emplace(key, entries_.size());
    entries_.push_back(canonical);
    auto& bucket = by_first_word_[words.front()];
    bucket.push_back({std::move(words), entries_.size() - 1});
    std::stable_sort(bucket.begin(), bucket.end(),
                     [](const Pattern& a, const Pattern& b) { return a.words.size() > b.words.size(); });
    return true;
  }

  const std::vector<std::string>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  /// Canonical form for a case-insensitive name, or nullptr.
  const std::string* canonical(std::string_view name) const {
    const auto key = detail::join_words(detail::location_words(name));
    const auto it = lookup_.find(key);
    return it == lookup_.end() ? nullptr : &entries_[it->second];
  }

  /// Greedy left-to-right scan; the longest name starting at each word wins
  /// and matches never overlap. Canonical names, deduplicated, in order of
  /// first appearance.
  std::vector<std::string> tag(std::string_view text) const {
    const auto words = detail::location_words(text);
    std::vector<std::string> found;
    std::size_t i = 0;
    while (i < words.size()) {
      const auto it = by_first_word_.find(words[i]);
      std::size_t matched = 0;
      if (it != by_first_word_.end()) {
        for (const auto& p : it->second) {
          if (i + p.words.size() > words.size()) continue;
          if (std::equal(p.words.begin(), p.words.end(), words.begin() + static_cast<std::ptrdiff_t>(i))) {
            const auto& name = entries_[p.entry];
            if (std::find(found.begin(), found.end(), name) == found.end()) found.push_back(name);
            matched = p.words.size();
            break;
          }
        }
      }
      i += matched > 0 ? matched : 1;
    }
    return found;
  }

 private:
  struct Pattern {
    std::vector<std::string> words;
    std::size_t entry;
  };

  std::vector<std::string> entries_;
  std::map<std::string, std::size_t> lookup_;
  std::map<std::string, std::vector<Pattern>> by_first_word_;
};

/// One name per line; `#` starts a comment line. Duplicates (after case
/// folding) collapse onto the first spelling. An empty result is legal and
/// reported through `warnings`.
inline Gazetteer load_gazetteer(const std::string& path, std::vector<std::string>* warnings = nullptr) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open gazetteer file: " + path);
  Gazetteer gaz;
  std::string line;
  while (std::getline(in, line)) {
    const auto entry = unicode::normalize_space(line);
    if (entry.empty() || entry.front() == '#') continue;
    gaz.add(entry);
  }
  if (gaz.empty() && warnings) warnings->push_back("gazetteer " + path + " has no entries");
  return gaz;
}

inline std::vector<std::string> tag_locations(Tweet& tweet, const Gazetteer& gaz) {
  tweet.locations = gaz.tag(tweet.text);
  return tweet.locations;
}

}  // namespace triage
