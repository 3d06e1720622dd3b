// Calendar dates and time bins. Dates are day-precision UTC; week bins are
// ISO weeks (Monday start).
#pragma once

#include <chrono>
#include <compare>
#include <cstdio>
#include <string>
#include <string_view>

#include "semascore/error.hpp"

namespace semascore {

struct Date {
  int year = 1970;
  unsigned month = 1;  // 1..12
  unsigned day = 1;    // 1..31

  auto operator<=>(const Date&) const = default;

  std::chrono::year_month_day ymd() const {
    return std::chrono::year{year} / std::chrono::month{month} /
           std::chrono::day{day};
  }

  std::chrono::sys_days serial() const {
    return std::chrono::sys_days{ymd()};
  }

  bool valid() const { return ymd().ok(); }

  static Date from_serial(std::chrono::sys_days d) {
    std::chrono::year_month_day ymd{d};
    return Date{int(ymd.year()), unsigned(ymd.month()), unsigned(ymd.day())};
  }
};

// Parses strict `YYYY-MM-DD` and rejects impossible calendar dates.
inline Date parse_date(std::string_view text, std::size_t line = 0) {
  auto fail = [&]() -> Date {
    throw ParseError("invalid date '" + std::string(text) + "' (want YYYY-MM-DD)",
                     line);
  };
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return fail();
  for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u})
    if (text[i] < '0' || text[i] > '9') return fail();
  auto num = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
    return v;
  };
  Date d{num(0, 4), unsigned(num(5, 2)), unsigned(num(8, 2))};
  if (!d.valid()) return fail();
  return d;
}

inline std::string format_date(const Date& d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", d.year, d.month, d.day);
  return buf;
}

enum class Granularity { day, week, month, period };

inline Granularity parse_granularity(std::string_view s) {
  if (s == "day") return Granularity::day;
  if (s == "week") return Granularity::week;
  if (s == "month") return Granularity::month;
  throw ValidationError("invalid bin granularity '" + std::string(s) +
                        "' (want day|week|month)");
}

inline std::string_view to_string(Granularity g) {
  switch (g) {
    case Granularity::day: return "day";
    case Granularity::week: return "week";
    case Granularity::month: return "month";
    case Granularity::period: return "period";
  }
  return "?";
}

// One inclusive calendar interval. `period` marks an aggregate span that is
// not produced by tiling (e.g. a whole-corpus bin).
struct TimeBin {
  Granularity granularity = Granularity::month;
  Date start;
  Date end;

  auto operator<=>(const TimeBin&) const = default;
};

// The day/week/month bin containing `d`.
inline TimeBin bin_containing(const Date& d, Granularity g) {
  using namespace std::chrono;
  switch (g) {
    case Granularity::day:
      return {g, d, d};
    case Granularity::week: {
      sys_days sd = d.serial();
      weekday wd{sd};
      sys_days monday = sd - days{(wd.iso_encoding() - 1)};
      return {g, Date::from_serial(monday), Date::from_serial(monday + days{6})};
    }
    case Granularity::month: {
      year_month ym{year{d.year}, month{d.month}};
      sys_days first{ym / 1};
      sys_days last{ym / std::chrono::last};
      return {g, Date::from_serial(first), Date::from_serial(last)};
    }
    case Granularity::period:
      break;
  }
  throw ValidationError("bin_containing: granularity must be day, week, or month");
}

// The bin immediately after `bin` (same granularity).
inline TimeBin next_bin(const TimeBin& bin) {
  using namespace std::chrono;
  return bin_containing(Date::from_serial(bin.end.serial() + days{1}),
                        bin.granularity);
}

}  // namespace semascore
