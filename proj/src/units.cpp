#include "durvote/units.hpp"

#include <algorithm>
#include <string>

namespace durvote {

namespace {

constexpr std::array<std::string_view, kUnitCount> kPlural = {
    "seconds", "minutes", "hours", "days",
    "weeks",   "months",  "years", "decades"};

constexpr std::array<std::string_view, kUnitCount> kSingular = {
    "second", "minute", "hour", "day", "week", "month", "year", "decade"};

}  // namespace

std::string_view unit_plural(DurationUnit u) { return kPlural[unit_index(u)]; }

std::string_view unit_singular(DurationUnit u) {
  return kSingular[unit_index(u)];
}

std::optional<DurationUnit> parse_unit(std::string_view word) {
  std::string lower(word);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (int i = 0; i < kUnitCount; ++i) {
    if (lower == kPlural[i] || lower == kSingular[i]) {
      return unit_from_index(i);
    }
  }
  return std::nullopt;
}

}  // namespace durvote
