#ifndef THOMPSON_REPORT_HPP
#define THOMPSON_REPORT_HPP

#include <cstddef>
#include <span>
#include <string>
#include <utility>

#include "thompson/conjectures.hpp"
#include "thompson/permutation.hpp"
#include "thompson/stats.hpp"

namespace thompson {

/// `width,height,orbits,count`, one row per histogram entry.
std::string histogram_csv(std::span<const StatsRecord> records);

/// `width,height,total,max_orbits,largest_classes`; the class list is quoted,
/// e.g. `4,1,16,2,"1,2"`.
std::string summary_csv(std::span<const StatsRecord> records);
std::string summary_csv_row(const StatsRecord& r);

/// `{"records": [{width, height, total, max_orbits, largest_classes, histogram}]}`.
std::string stats_json(std::span<const StatsRecord> records);

/// Bar chart of one record's class sizes.
std::string histogram_svg(const StatsRecord& r);

std::string conjecture_json(const ConjectureReport& report);

/// `{"word", "leaves", "orbits", "cycles": [[...], ...]}`.
std::string permutation_json(const PositiveWord& w, std::size_t leaves, const ThompsonPermutation& p);

struct Sample {
    PositiveWord word;
    std::size_t orbits = 0;
};

/// `word,orbits` with the word quoted.
std::string samples_csv(std::span<const Sample> samples);
std::string samples_json(std::span<const Sample> samples);

}  // namespace thompson

#endif  // THOMPSON_REPORT_HPP
