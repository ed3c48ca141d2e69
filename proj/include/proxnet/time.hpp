#pragma once

#include <chrono>
#include <string>
#include <string_view>

#include "proxnet/errors.hpp"

namespace proxnet {

// All timestamps are UTC with one-second resolution.
using TimePoint = std::chrono::sys_seconds;
using Duration = std::chrono::seconds;

// Parses an RFC 3339 timestamp ("2016-03-28T09:05:00Z"). Numeric offsets
// are converted to UTC; fractional seconds are truncated.
TimePoint parse_rfc3339(std::string_view text);

// Formats a timestamp as "YYYY-MM-DDTHH:MM:SSZ".
std::string format_rfc3339(TimePoint tp);

// Half-open interval [start, end).
struct TimeWindow {
  TimePoint start{};
  TimePoint end{};

  Duration length() const { return end - start; }
  bool contains(TimePoint tp) const { return tp >= start && tp < end; }
  bool operator==(const TimeWindow&) const = default;

  // Throws RangeError unless end > start.
  void validate() const;
};

// True for Monday..Friday of the UTC calendar date containing tp.
bool is_weekday(TimePoint tp);

// Midnight UTC of the calendar date containing tp.
TimePoint start_of_day(TimePoint tp);

}  // namespace proxnet
