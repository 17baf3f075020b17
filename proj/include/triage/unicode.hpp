#pragma once

// UTF-8 helpers backed by ICU's character properties. Invalid byte
// sequences decode to a negative code point and are treated as separators.

#include <cstdint>
#include <string>
#include <string_view>

#include <unicode/uchar.h>
#include <unicode/utf8.h>

namespace triage::unicode {

struct Decoded {
  UChar32 cp;        // < 0 on an invalid sequence
  std::size_t next;  // byte offset after this code point
};

inline Decoded decode_at(std::string_view s, std::size_t pos) {
  const auto* bytes = reinterpret_cast<const uint8_t*>(s.data());
  int32_t i = static_cast<int32_t>(pos);
  const auto length = static_cast<int32_t>(s.size());
  UChar32 c = 0;
  U8_NEXT(bytes, i, length, c);
  return {c, static_cast<std::size_t>(i)};
}

inline void append(std::string& out, UChar32 cp) {
  char buf[U8_MAX_LENGTH];
  int32_t n = 0;
  U8_APPEND_UNSAFE(buf, n, cp);
  out.append(buf, static_cast<std::size_t>(n));
}

/// Letters, combining marks and decimal digits form words; everything else
/// splits. Marks are included so decomposed diacritics stay attached.
inline bool is_word_char(UChar32 cp) {
  if (cp < 0) return false;
  if (cp < 0x80) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9');
  }
  const auto mask = U_GET_GC_MASK(cp);
  return (mask & (U_GC_L_MASK | U_GC_M_MASK | U_GC_ND_MASK)) != 0;
}

inline bool is_space(UChar32 cp) { return cp >= 0 && u_isUWhiteSpace(cp); }

/// Simple (one-to-one) case folding to lowercase. Invalid bytes are dropped.
inline std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t pos = 0; pos < s.size();) {
    const auto [cp, next] = decode_at(s, pos);
    pos = next;
    if (cp < 0) continue;
    append(out, u_tolower(cp));
  }
  return out;
}

/// Trims surrounding whitespace and collapses inner runs to one ASCII space.
inline std::string normalize_space(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (std::size_t pos = 0; pos < s.size();) {
    const auto [cp, next] = decode_at(s, pos);
    if (cp >= 0 && is_space(cp)) {
      pending_space = !out.empty();
    } else {
      if (pending_space) out.push_back(' ');
      pending_space = false;
      out.append(s.substr(pos, next - pos));
    }
    pos = next;
  }
  return out;
}

}  // namespace triage::unicode
