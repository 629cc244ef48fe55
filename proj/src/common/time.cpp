#include "hearth/common/time.hpp"

#include <cstdio>

#include "hearth/common/error.hpp"

namespace hearth {

using namespace std::chrono;

Timestamp now_utc() { return time_point_cast<microseconds>(Clock::now()); }

std::string format_timestamp(Timestamp t) {
  const auto day = floor<days>(t);
  const year_month_day ymd{day};
  const hh_mm_ss tod{t - day};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02ld:%02ld:%02ld.%06ldZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<long>(tod.hours().count()),
                static_cast<long>(tod.minutes().count()), static_cast<long>(tod.seconds().count()),
                static_cast<long>(tod.subseconds().count()));
  return buf;
}

Timestamp parse_timestamp(std::string_view text) {
  int y = 0;
  unsigned mo = 0, d = 0;
  long h = 0, mi = 0, s = 0, us = 0;
  char z = 0;
  const std::string copy(text);
  if (std::sscanf(copy.c_str(), "%4d-%2u-%2uT%2ld:%2ld:%2ld.%6ld%c", &y, &mo, &d, &h, &mi, &s,
                  &us, &z) != 8 ||
      z != 'Z' || copy.size() != 27)
    throw MalformedInput("bad timestamp: " + copy);
  const year_month_day ymd{year{y}, month{mo}, day{d}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) throw MalformedInput("bad timestamp: " + copy);
  return Timestamp{sys_days{ymd}.time_since_epoch() + hours{h} + minutes{mi} + seconds{s} +
                   microseconds{us}};
}

}  // namespace hearth
