#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace windcorr {

// ISO-8601 UTC, second resolution: 2014-03-01T00:00:00Z
std::string format_iso8601(std::int64_t epoch_s);
std::int64_t parse_iso8601(std::string_view text);

// Durations accept a plain number of seconds or a number with one of the
// suffixes s, m/min, h, d ("10s", "30m", "1h", "12h", "1d").
std::int64_t parse_duration(std::string_view text);
std::string format_duration(std::int64_t seconds);

}  // namespace windcorr
