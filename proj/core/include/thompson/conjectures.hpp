#ifndef THOMPSON_CONJECTURES_HPP
#define THOMPSON_CONJECTURES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "thompson/stats.hpp"

namespace thompson {

/// One evaluated claim about one (width, height) record.
struct ConjectureCheck {
    int item = 0;  // 1..7
    std::size_t width = 0;
    PositiveWord::Exponent height = 0;
    std::string claim;  // e.g. "max_orbits = 2h"
    std::string predicted;
    std::string observed;
    bool holds = false;
};

/// Row of the published width/height table, with range rows expanded.
struct PublishedRow {
    std::size_t width = 0;
    PositiveWord::Exponent height = 0;
    std::size_t max_orbits = 0;
    std::vector<std::size_t> largest_classes;
    /// Element count as printed. Differs from (h+1)^w only for width 3,
    /// height 35, which is printed as 42875.
    std::uint64_t printed_total = 0;
};

/// Published row for (width, height) if the table covers it.
std::optional<PublishedRow> published_row(std::size_t width, PositiveWord::Exponent height);

struct TableCheck {
    PublishedRow row;
    std::size_t max_orbits = 0;
    std::vector<std::size_t> largest_classes;
    std::uint64_t total = 0;
    bool max_matches = false;
    bool largest_matches = false;
    bool total_matches = false;

    bool holds() const { return max_matches && largest_matches && total_matches; }
};

/// Formula checks and table checks are kept apart: the formulas can disagree
/// with the printed table (width 2, height 1 prints a maximum of 1, not h+1).
struct ConjectureReport {
    std::vector<ConjectureCheck> checks;
    std::vector<TableCheck> table;

    bool all_hold() const;
    /// Checks for one conjecture item.
    std::vector<ConjectureCheck> item(int number) const;
};

/// Evaluates every item whose stated height range covers a record: item 1
/// (every orbit count 1..M occurs) on all records, items 2..7 on widths 2..7.
ConjectureReport check_conjectures(std::span<const StatsRecord> records);

}  // namespace thompson

#endif  // THOMPSON_CONJECTURES_HPP
