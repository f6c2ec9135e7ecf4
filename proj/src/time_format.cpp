#include "windcorr/time_format.hpp"

#include "windcorr/errors.hpp"

#include <charconv>
#include <cstdio>

namespace windcorr {

namespace {

// Civil-calendar conversions on the proleptic Gregorian calendar
// (days relative to 1970-01-01).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

void civil_from_days(std::int64_t z, std::int64_t& y, unsigned& m, unsigned& d) {
  z += 719468;
  const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
  const unsigned doe = static_cast<unsigned>(z - era * 146097);
  const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<std::int64_t>(yoe) + era * 400;
  const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  const unsigned mp = (5 * doy + 2) / 153;
  d = doy - (153 * mp + 2) / 5 + 1;
  m = mp + (mp < 10 ? 3 : -9);
  y += m <= 2;
}

int parse_fixed_int(std::string_view text, std::size_t pos, std::size_t len) {
  int value = 0;
  for (std::size_t i = pos; i < pos + len; ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') throw Error("malformed timestamp: " + std::string(text));
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

std::string format_iso8601(std::int64_t epoch_s) {
  std::int64_t days = epoch_s / 86400;
  std::int64_t sod = epoch_s % 86400;
  if (sod < 0) {
    sod += 86400;
    days -= 1;
  }
  std::int64_t y;
  unsigned m, d;
  civil_from_days(days, y, m, d);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%04lld-%02u-%02uT%02lld:%02lld:%02lldZ",
                static_cast<long long>(y), m, d, static_cast<long long>(sod / 3600),
                static_cast<long long>((sod / 60) % 60), static_cast<long long>(sod % 60));
  return buf;
}

std::int64_t parse_iso8601(std::string_view text) {
  // YYYY-MM-DDTHH:MM:SSZ, 20 chars, 'T' or ' ' separator accepted.
  if (text.size() != 20 || text[4] != '-' || text[7] != '-' ||
      (text[10] != 'T' && text[10] != ' ') || text[13] != ':' || text[16] != ':' ||
      text[19] != 'Z') {
    throw Error("malformed timestamp: '" + std::string(text) +
                "' (expected YYYY-MM-DDTHH:MM:SSZ)");
  }
  const int year = parse_fixed_int(text, 0, 4);
  const int month = parse_fixed_int(text, 5, 2);
  const int day = parse_fixed_int(text, 8, 2);
  const int hour = parse_fixed_int(text, 11, 2);
  const int minute = parse_fixed_int(text, 14, 2);
  const int second = parse_fixed_int(text, 17, 2);
  if (month < 1 || month > 12 || day < 1 || day > 31 || hour > 23 || minute > 59 ||
      second > 60) {
    throw Error("malformed timestamp: '" + std::string(text) + "' (field out of range)");
  }
  return days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day)) * 86400 +
         hour * 3600 + minute * 60 + second;
}

std::int64_t parse_duration(std::string_view text) {
  if (text.empty()) throw Error("empty duration");
  std::size_t unit_pos = text.size();
  while (unit_pos > 0 && !(text[unit_pos - 1] >= '0' && text[unit_pos - 1] <= '9')) --unit_pos;
  if (unit_pos == 0) throw Error("malformed duration: '" + std::string(text) + "'");
  std::int64_t number = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + unit_pos, number);
  if (ec != std::errc() || ptr != text.data() + unit_pos || number < 0) {
    throw Error("malformed duration: '" + std::string(text) + "'");
  }
  const std::string_view unit = text.substr(unit_pos);
  std::int64_t factor;
  if (unit.empty() || unit == "s") {
    factor = 1;
  } else if (unit == "m" || unit == "min") {
    factor = 60;
  } else if (unit == "h") {
    factor = 3600;
  } else if (unit == "d") {
    factor = 86400;
  } else {
    throw Error("unknown duration unit '" + std::string(unit) + "' in '" + std::string(text) + "'");
  }
  return number * factor;
}

std::string format_duration(std::int64_t seconds) {
  if (seconds % 86400 == 0 && seconds != 0) return std::to_string(seconds / 86400) + "d";
  if (seconds % 3600 == 0 && seconds != 0) return std::to_string(seconds / 3600) + "h";
  if (seconds % 60 == 0 && seconds != 0) return std::to_string(seconds / 60) + "m";
  return std::to_string(seconds) + "s";
}

}  // namespace windcorr
