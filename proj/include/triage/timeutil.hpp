#pragma once

// ISO-8601 timestamps normalized to UTC seconds since the Unix epoch.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>

namespace triage {

using UtcSeconds = std::int64_t;

inline constexpr UtcSeconds kSecondsPerDay = 86400;

namespace detail {

inline bool read_digits(std::string_view s, std::size_t& pos, std::size_t count, int& out) {
  if (pos + count > s.size()) return false;
  int value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const char c = s[pos + i];
    if (c < '0' || c > '9') return false;
    value = value * 10 + (c - '0');
  }
  pos += count;
  out = value;
  return true;
}

inline bool expect(std::string_view s, std::size_t& pos, char c) {
  if (pos < s.size() && s[pos] == c) {
    ++pos;
    return true;
  }
  return false;
}

}  // namespace detail

/// Accepts `YYYY-MM-DD[T ]hh:mm[:ss[.fff]](Z|±hh[:mm]|±hhmm)`. A zone
/// designator is required. Fractional seconds are truncated.
inline std::optional<UtcSeconds> parse_iso8601(std::string_view s) {
  using namespace std::chrono;
  std::size_t pos = 0;
  int year = 0, month = 0, day = 0, hour = 0, minute = 0, second = 0;
  if (!detail::read_digits(s, pos, 4, year) || !detail::expect(s, pos, '-') ||
      !detail::read_digits(s, pos, 2, month) || !detail::expect(s, pos, '-') ||
      !detail::read_digits(s, pos, 2, day)) {
    return std::nullopt;
  }
  if (!(detail::expect(s, pos, 'T') || detail::expect(s, pos, 't') || detail::expect(s, pos, ' '))) {
    return std::nullopt;
  }
  if (!detail::read_digits(s, pos, 2, hour) || !detail::expect(s, pos, ':') ||
      !detail::read_digits(s, pos, 2, minute)) {
    return std::nullopt;
  }
  if (detail::expect(s, pos, ':')) {
    if (!detail::read_digits(s, pos, 2, second)) return std::nullopt;
    if (detail::expect(s, pos, '.') || detail::expect(s, pos, ',')) {
      const std::size_t start = pos;
      while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
      if (pos == start) return std::nullopt;
    }
  }
  if (hour > 23 || minute > 59 || second > 60) return std::nullopt;

  int offset_seconds = 0;
  if (detail::expect(s, pos, 'Z') || detail::expect(s, pos, 'z')) {
    offset_seconds = 0;
  } else if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    const int sign = s[pos] == '-' ? -1 : 1;
    ++pos;
    int oh = 0, om = 0;
    if (!detail::read_digits(s, pos, 2, oh)) return std::nullopt;
    if (pos < s.size()) {
      detail::expect(s, pos, ':');
      if (!detail::read_digits(s, pos, 2, om)) return std::nullopt;
    }
    if (oh > 23 || om > 59) return std::nullopt;
    offset_seconds = sign * (oh * 3600 + om * 60);
  } else {
    return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;

  const year_month_day ymd{std::chrono::year{year}, std::chrono::month{static_cast<unsigned>(month)},
                           std::chrono::day{static_cast<unsigned>(day)}};
  if (!ymd.ok()) return std::nullopt;
  const auto days_since_epoch = sys_days{ymd}.time_since_epoch().count();
  return static_cast<UtcSeconds>(days_since_epoch) * kSecondsPerDay + hour * 3600 + minute * 60 +
         second - offset_seconds;
}

/// `YYYY-MM-DDThh:mm:ssZ`
inline std::string format_iso8601(UtcSeconds t) {
  using namespace std::chrono;
  auto days = t / kSecondsPerDay;
  auto rem = t % kSecondsPerDay;
  if (rem < 0) {
    rem += kSecondsPerDay;
    --days;
  }
  const year_month_day ymd{sys_days{std::chrono::days{days}}};
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02dZ", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()),
                static_cast<int>(rem / 3600), static_cast<int>(rem % 3600 / 60),
                static_cast<int>(rem % 60));
  return buf;
}

}  // namespace triage
