#ifndef THOMPSON_STATS_HPP
#define THOMPSON_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "thompson/enumerate.hpp"

namespace thompson {

/// Orbit-count histogram ("classes") over one width/height grid.
struct StatsRecord {
    std::size_t width = 1;
    PositiveWord::Exponent height = 0;
    /// Set when the record pools several grids.
    bool cumulative = false;
    /// orbit count -> number of elements
    std::map<std::size_t, std::uint64_t> histogram;

    void add(std::size_t orbits, std::uint64_t count = 1) { histogram[orbits] += count; }

    std::uint64_t total() const;
    /// Largest orbit count present, 0 for an empty record.
    std::size_t max_orbits() const;
    /// Every orbit count whose class has the maximal size, ascending.
    std::vector<std::size_t> largest_classes() const;

    friend bool operator==(const StatsRecord&, const StatsRecord&) = default;
};

enum class MergeMode : std::uint8_t { same_grid, cumulative };

/// Pointwise histogram sum. In `same_grid` mode both records must share
/// width and height; `cumulative` mode keeps the larger bounds and marks the
/// result cumulative.
StatsRecord merge(const StatsRecord& a, const StatsRecord& b, MergeMode mode = MergeMode::same_grid);

/// Histogram of the elements with lexicographic index in [first, last).
StatsRecord aggregate_range(const Grid& grid, std::uint64_t first, std::uint64_t last);

/// Full grid, split into `jobs` contiguous index ranges handled by worker
/// threads and merged in index order. The result does not depend on `jobs`.
StatsRecord aggregate(std::size_t width, PositiveWord::Exponent height, unsigned jobs = 1);

}  // namespace thompson

#endif  // THOMPSON_STATS_HPP
