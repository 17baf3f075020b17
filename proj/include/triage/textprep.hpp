#pragma once

// Tokenization, stopword removal and hashtag handling.

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "triage/error.hpp"
#include "triage/types.hpp"
#include "triage/unicode.hpp"

namespace triage {

using TokenList = std::vector<std::string>;

class StopwordList {
 public:
  StopwordList() = default;

  StopwordList(std::initializer_list<std::string_view> words) {
    for (auto w : words) insert(w);
  }

  template <typename Range>
  static StopwordList from(const Range& words) {
    StopwordList list;
    for (const auto& w : words) list.insert(w);
    return list;
  }

  /// Entries are stored lowercase. Throws on embedded whitespace.
  void insert(std::string_view word) {
    auto normalized = unicode::normalize_space(word);
    if (normalized.empty()) return;
    if (normalized.find(' ') != std::string::npos) {
      throw Error(ErrorKind::Validation, "stopword contains whitespace: '" + normalized + "'");
    }
    words_.insert(unicode::to_lower(normalized));
  }

  bool contains(const std::string& token) const { return words_.count(token) != 0; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  std::vector<std::string> sorted() const {
    std::vector<std::string> out(words_.begin(), words_.end());
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::unordered_set<std::string> words_;
};

/// One token per line; blank lines and lines starting with `#` are ignored.
inline StopwordList load_stopwords(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open stopword file: " + path);
  StopwordList list;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto entry = unicode::normalize_space(line);
    if (entry.empty() || entry.front() == '#') continue;
    try {
      list.insert(entry);
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, path + ":" + std::to_string(line_no) + ": " + e.what());
    }
  }
  return list;
}

namespace detail {

inline bool starts_with_url(std::string_view s, std::size_t pos) {
  const auto rest = s.substr(pos);
  return rest.starts_with("http://") || rest.starts_with("https://");
}

inline std::size_t skip_to_space(std::string_view s, std::size_t pos) {
  while (pos < s.size()) {
    const auto [cp, next] = unicode::decode_at(s, pos);
    if (unicode::is_space(cp)) break;
    pos = next;
  }
  return pos;
}

inline bool is_tag_char(UChar32 cp) { return cp == '_' || unicode::is_word_char(cp); }

inline std::size_t skip_tag_chars(std::string_view s, std::size_t pos) {
  while (pos < s.size()) {
    const auto [cp, next] = unicode::decode_at(s, pos);
    if (!is_tag_char(cp)) break;
    pos = next;
  }
  return pos;
}

}  // namespace detail

/// Lowercases, drops URLs and @mentions, then splits on every character that
/// is not a letter, mark or digit. A hashtag's body survives as a token.
inline TokenList tokenize(std::string_view text) {
  const std::string s = unicode::to_lower(text);
  TokenList tokens;
  std::string current;
  bool prev_word = false;
  auto flush = [&] {
    if (!current.empty()) tokens.push_back(std::move(current));
    current.clear();
  };

  for (std::size_t pos = 0; pos < s.size();) {
    if (s[pos] == 'h' && !prev_word && detail::starts_with_url(s, pos)) {
      flush();
      pos = detail::skip_to_space(s, pos);
      prev_word = false;
      continue;
    }
    if (s[pos] == '@' && !prev_word) {
      flush();
      pos = detail::skip_tag_chars(s, pos + 1);
      prev_word = false;
      continue;
    }
    const auto [cp, next] = unicode::decode_at(s, pos);
    if (unicode::is_word_char(cp)) {
      current.append(s, pos, next - pos);
      prev_word = true;
    } else {
      flush();
      prev_word = false;
    }
    pos = next;
  }
  flush();
  return tokens;
}

inline TokenList remove_stopwords(const TokenList& tokens, const StopwordList& stoplist) {
  TokenList out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) {
    if (!stoplist.contains(t)) out.push_back(t);
  }
  return out;
}

inline TokenList preprocess(std::string_view text, const StopwordList& stoplist) {
  return remove_stopwords(tokenize(text), stoplist);
}

/// Bodies of `#tag` runs (letters, digits, underscore), lowercased, in order
/// of first appearance, without duplicates. Tags inside URLs are ignored.
inline std::vector<std::string> extract_hashtags(std::string_view text) {
  const std::string s = unicode::to_lower(text);
  std::vector<std::string> tags;
  for (std::size_t pos = 0; pos < s.size();) {
    if (detail::starts_with_url(s, pos)) {
      pos = detail::skip_to_space(s, pos);
      continue;
    }
    if (s[pos] == '#') {
      const std::size_t end = detail::skip_tag_chars(s, pos + 1);
      if (end > pos + 1) {
        std::string body = s.substr(pos + 1, end - pos - 1);
        if (std::find(tags.begin(), tags.end(), body) == tags.end()) tags.push_back(std::move(body));
        pos = end;
        continue;
      }
    }
    pos = unicode::decode_at(s, pos).next;
  }
  return tags;
}

/// Tweets sharing at least one tag with `tags`, in their original order.
inline std::vector<Tweet> filter_by_hashtags(const std::vector<Tweet>& tweets,
                                             const std::set<std::string>& tags) {
  std::vector<Tweet> out;
  if (tags.empty()) return out;
  for (const auto& tw : tweets) {
    const bool shared = std::any_of(tw.hashtags.begin(), tw.hashtags.end(),
                                    [&](const std::string& h) { return tags.count(h) != 0; });
    if (shared) out.push_back(tw);
  }
  return out;
}

}  // namespace triage
