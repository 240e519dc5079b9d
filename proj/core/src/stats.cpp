#include "thompson/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "thompson/permutation.hpp"

namespace thompson {

std::uint64_t StatsRecord::total() const {
    std::uint64_t n = 0;
    for (const auto& [orbits, count] : histogram) n += count;
    return n;
}

std::size_t StatsRecord::max_orbits() const { return histogram.empty() ? 0 : histogram.rbegin()->first; }

std::vector<std::size_t> StatsRecord::largest_classes() const {
    std::uint64_t best = 0;
    for (const auto& [orbits, count] : histogram) best = std::max(best, count);
    std::vector<std::size_t> out;
    for (const auto& [orbits, count] : histogram) {
        if (count == best && count != 0) out.push_back(orbits);
    }
    return out;
}

StatsRecord merge(const StatsRecord& a, const StatsRecord& b, MergeMode mode) {
    StatsRecord out = a;
    if (mode == MergeMode::same_grid) {
        if (a.width != b.width || a.height != b.height || a.cumulative != b.cumulative) {
            throw std::invalid_argument("merge: records cover different grids");
        }
    } else {
        out.width = std::max(a.width, b.width);
        out.height = std::max(a.height, b.height);
        out.cumulative = true;
    }
    for (const auto& [orbits, count] : b.histogram) out.add(orbits, count);
    return out;
}

StatsRecord aggregate_range(const Grid& grid, std::uint64_t first, std::uint64_t last) {
    StatsRecord record{grid.width, grid.height, false, {}};
    for_each_element(grid, first, last, [&](const PositiveWord& w) { record.add(positive_orbit_count(w)); });
    return record;
}

StatsRecord aggregate(std::size_t width, PositiveWord::Exponent height, unsigned jobs) {
    const Grid grid = make_grid(width, height);
    const std::uint64_t n = grid.size();
    const std::uint64_t shards = std::clamp<std::uint64_t>(jobs, 1, std::max<std::uint64_t>(n, 1));

    std::vector<StatsRecord> parts(shards);
    auto bounds = [&](std::uint64_t s) { return n / shards * s + std::min(s, n % shards); };
    if (shards == 1) {
        parts[0] = aggregate_range(grid, 0, n);
    } else {
        std::vector<std::jthread> workers;
        workers.reserve(shards);
        for (std::uint64_t s = 0; s < shards; ++s) {
            workers.emplace_back([&, s] { parts[s] = aggregate_range(grid, bounds(s), bounds(s + 1)); });
        }
    }

    StatsRecord result{width, height, false, {}};
    for (const auto& part : parts) result = merge(result, part);
    return result;
}

}  // namespace thompson
