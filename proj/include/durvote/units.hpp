#pragma once

#include <array>
#include <cstdlib>
#include <optional>
#include <string_view>

namespace durvote {

/// The eight ordered duration granularities every duration in the pipeline
/// is expressed on, shortest to longest.
enum class DurationUnit : int {
  Seconds = 0,
  Minutes,
  Hours,
  Days,
  Weeks,
  Months,
  Years,
  Decades,
};

inline constexpr int kUnitCount = 8;

constexpr int unit_index(DurationUnit u) { return static_cast<int>(u); }

constexpr DurationUnit unit_from_index(int i) {
  return static_cast<DurationUnit>(i);
}

constexpr std::array<DurationUnit, kUnitCount> all_units() {
  return {DurationUnit::Seconds, DurationUnit::Minutes, DurationUnit::Hours,
          DurationUnit::Days,    DurationUnit::Weeks,   DurationUnit::Months,
          DurationUnit::Years,   DurationUnit::Decades};
}

/// Distance on the unit scale: |index(a) - index(b)|.
constexpr int unit_distance(DurationUnit a, DurationUnit b) {
  const int d = unit_index(a) - unit_index(b);
  return d < 0 ? -d : d;
}

std::string_view unit_plural(DurationUnit u);
std::string_view unit_singular(DurationUnit u);

/// Accepts the singular or plural unit word, case-insensitive.
std::optional<DurationUnit> parse_unit(std::string_view word);

}  // namespace durvote
