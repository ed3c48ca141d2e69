#include "proxnet/time.hpp"

#include <cctype>
#include <cstdio>

namespace proxnet {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

int to_int(std::string_view s) {
  int v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

[[noreturn]] void bad(std::string_view text) {
  throw ValidationError("bad RFC3339 timestamp: \"" + std::string(text) + "\"");
}

}  // namespace

TimePoint parse_rfc3339(std::string_view text) {
  using namespace std::chrono;
  std::string_view s = text;
  // Date: YYYY-MM-DD
  if (s.size() < 20 || s[4] != '-' || s[7] != '-') bad(text);
  if (s[10] != 'T' && s[10] != 't' && s[10] != ' ') bad(text);
  if (s[13] != ':' || s[16] != ':') bad(text);
  std::string_view ys = s.substr(0, 4), mos = s.substr(5, 2), ds = s.substr(8, 2);
  std::string_view hs = s.substr(11, 2), mis = s.substr(14, 2), ss = s.substr(17, 2);
  if (!all_digits(ys) || !all_digits(mos) || !all_digits(ds) || !all_digits(hs) ||
      !all_digits(mis) || !all_digits(ss)) {
    bad(text);
  }
  int y = to_int(ys), mo = to_int(mos), d = to_int(ds);
  int h = to_int(hs), mi = to_int(mis), se = to_int(ss);
  if (mo < 1 || mo > 12 || d < 1 || h > 23 || mi > 59 || se > 60) bad(text);
  if (se == 60) se = 59;  // fold leap seconds

  year_month_day ymd{year{y}, month{static_cast<unsigned>(mo)}, day{static_cast<unsigned>(d)}};
  if (!ymd.ok()) bad(text);

  std::size_t pos = 19;
  if (pos < s.size() && s[pos] == '.') {  // fractional seconds: truncate
    ++pos;
    std::size_t digits = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      ++pos;
      ++digits;
    }
    if (digits == 0) bad(text);
  }
  if (pos >= s.size()) bad(text);

  seconds offset{0};
  char c = s[pos];
  if (c == 'Z' || c == 'z') {
    ++pos;
  } else if (c == '+' || c == '-') {
    if (pos + 6 > s.size() || s[pos + 3] != ':') bad(text);
    std::string_view oh = s.substr(pos + 1, 2), om = s.substr(pos + 4, 2);
    if (!all_digits(oh) || !all_digits(om)) bad(text);
    offset = hours{to_int(oh)} + minutes{to_int(om)};
    if (c == '-') offset = -offset;
    pos += 6;
  } else {
    bad(text);
  }
  if (pos != s.size()) bad(text);

  sys_seconds tp = sys_days{ymd} + hours{h} + minutes{mi} + seconds{se};
  return tp - offset;
}

std::string format_rfc3339(TimePoint tp) {
  using namespace std::chrono;
  sys_days date = floor<days>(tp);
  year_month_day ymd{date};
  hh_mm_ss tod{tp - date};
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()),
                static_cast<long long>(tod.hours().count()),
                static_cast<long long>(tod.minutes().count()),
                static_cast<long long>(tod.seconds().count()));
  return buf;
}

void TimeWindow::validate() const {
  if (end <= start) {
    throw RangeError("time window end (" + format_rfc3339(end) +
                     ") must be after start (" + format_rfc3339(start) + ")");
  }
}

bool is_weekday(TimePoint tp) {
  using namespace std::chrono;
  weekday wd{floor<days>(tp)};
  return wd != Saturday && wd != Sunday;
}

TimePoint start_of_day(TimePoint tp) {
  return std::chrono::floor<std::chrono::days>(tp);
}

}  // namespace proxnet
