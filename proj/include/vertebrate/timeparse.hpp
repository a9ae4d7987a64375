// ISO-8601 timestamp parsing and UTC calendar math.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace vertebrate {

struct UtcTime {
  std::int64_t epoch_seconds = 0;
  auto operator<=>(const UtcTime&) const = default;
};

struct CivilDate {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31
  auto operator<=>(const CivilDate&) const = default;
};

// Accepts YYYY-MM-DD with an optional [T ]HH:MM[:SS[.frac]] part and an
// optional Z or +-HH[:MM] offset. Missing offset means UTC. Fractional
// seconds are truncated. Returns nullopt on any syntactic or range error.
std::optional<UtcTime> parse_iso8601(std::string_view text);

std::int64_t days_from_civil(const CivilDate& date);
CivilDate civil_from_days(std::int64_t days);
CivilDate utc_date(UtcTime t);
std::int64_t utc_day_index(UtcTime t);

std::string format_date(const CivilDate& date);       // YYYY-MM-DD
std::string format_iso8601(UtcTime t);                // YYYY-MM-DDTHH:MM:SSZ

}  // namespace vertebrate
