#include "thompson/conjectures.hpp"

#include <algorithm>
#include <array>

namespace thompson {

namespace {

using Classes = std::vector<std::size_t>;

std::uint64_t power(std::uint64_t base, std::size_t exp) {
    std::uint64_t n = 1;
    for (std::size_t i = 0; i < exp; ++i) n *= base;
    return n;
}

std::string join(const Classes& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

struct Formula {
    int item;
    std::size_t width;
    // Heights from which the maximum and the largest-class claims apply.
    std::optional<std::uint32_t> max_from;
    std::optional<std::uint32_t> largest_from;
    const char* max_text;
    const char* largest_text;
    std::size_t (*max_orbits)(std::uint32_t h);
    std::size_t (*largest)(std::uint32_t h);
};

const std::array<Formula, 6>& formulas() {
    static const std::array<Formula, 6> table{{
        {2, 2, 0, 0, "h+1", "1", [](std::uint32_t h) -> std::size_t { return h + 1; },
         [](std::uint32_t) -> std::size_t { return 1; }},
        {3, 3, 0, 3, "h+1", "2", [](std::uint32_t h) -> std::size_t { return h + 1; },
         [](std::uint32_t) -> std::size_t { return 2; }},
        {4, 4, 1, std::nullopt, "2h", "", [](std::uint32_t h) -> std::size_t { return 2 * std::size_t{h}; },
         nullptr},
        {5, 5, 2, 2, "2h", "h-1", [](std::uint32_t h) -> std::size_t { return 2 * std::size_t{h}; },
         [](std::uint32_t h) -> std::size_t { return h - 1; }},
        {6, 6, 2, std::nullopt, "3h-1", "",
         [](std::uint32_t h) -> std::size_t { return 3 * std::size_t{h} - 1; }, nullptr},
        {7, 7, 2, 2, "3h-1", "h", [](std::uint32_t h) -> std::size_t { return 3 * std::size_t{h} - 1; },
         [](std::uint32_t h) -> std::size_t { return h; }},
    }};
    return table;
}

}  // namespace

std::optional<PublishedRow> published_row(std::size_t width, PositiveWord::Exponent height) {
    const std::uint32_t h = height;
    auto row = [&](std::size_t m, Classes largest) {
        return PublishedRow{width, height, m, std::move(largest), power(std::uint64_t{h} + 1, width)};
    };
    switch (width) {
        case 2:
            if (h <= 1) return row(1, {1});
            if (h <= 100) return row(h + 1, {1});
            break;
        case 3:
            if (h <= 2) return row(h + 1, {1});
            if (h <= 35) {
                auto r = row(h + 1, {2});
                if (h == 35) r.printed_total = 42875;
                return r;
            }
            break;
        case 4: {
            static const std::array<Classes, 13> largest{{{1}, {1, 2}, {2}, {2}, {3}, {5}, {6}, {6}, {8}, {9},
                                                          {10}, {11}, {12}}};
            if (h == 0) return row(1, largest[0]);
            if (h <= 12) return row(2 * std::size_t{h}, largest[h]);
            break;
        }
        case 5:
            if (h == 0) return row(1, {1});
            if (h == 1) return row(3, {1});
            if (h <= 11) return row(2 * std::size_t{h}, {std::size_t{h} - 1});
            break;
        case 6: {
            static const std::array<std::size_t, 9> max{1, 3, 5, 8, 11, 14, 17, 20, 23};
            static const std::array<std::size_t, 9> largest{1, 1, 2, 3, 4, 5, 6, 7, 9};
            if (h <= 8) return row(max[h], {largest[h]});
            break;
        }
        case 7:
            if (h == 0) return row(1, {1});
            if (h == 1) return row(4, {2});
            if (h <= 6) return row(3 * std::size_t{h} - 1, {h});
            break;
        default:
            break;
    }
    return std::nullopt;
}

bool ConjectureReport::all_hold() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; }) &&
           std::all_of(table.begin(), table.end(), [](const auto& t) { return t.holds(); });
}

std::vector<ConjectureCheck> ConjectureReport::item(int number) const {
    std::vector<ConjectureCheck> out;
    std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
                 [&](const auto& c) { return c.item == number; });
    return out;
}

ConjectureReport check_conjectures(std::span<const StatsRecord> records) {
    ConjectureReport report;
    for (const auto& r : records) {
        const std::size_t m = r.max_orbits();
        const Classes largest = r.largest_classes();

        Classes missing;
        for (std::size_t j = 1; j <= m; ++j) {
            if (!r.histogram.contains(j)) missing.push_back(j);
        }
        report.checks.push_back({1, r.width, r.height, "every orbit count 1..M occurs", "1.." + std::to_string(m),
                                 missing.empty() ? "all present" : "missing " + join(missing), missing.empty()});

        for (const auto& f : formulas()) {
            if (r.cumulative || f.width != r.width) continue;
            if (f.max_from && r.height >= *f.max_from) {
                const std::size_t predicted = f.max_orbits(r.height);
                report.checks.push_back({f.item, r.width, r.height, std::string("max_orbits = ") + f.max_text,
                                         std::to_string(predicted), std::to_string(m), predicted == m});
            }
            if (f.largest_from && r.height >= *f.largest_from) {
                const Classes predicted{f.largest(r.height)};
                report.checks.push_back({f.item, r.width, r.height,
                                         std::string("largest class = ") + f.largest_text, join(predicted),
                                         join(largest), predicted == largest});
            }
        }

        if (const auto row = published_row(r.width, r.height); row && !r.cumulative) {
            TableCheck t{*row, m, largest, r.total()};
            t.max_matches = row->max_orbits == m;
            t.largest_matches = row->largest_classes == largest;
            t.total_matches = row->printed_total == r.total();
            report.table.push_back(std::move(t));
        }
    }
    return report;
}

}  // namespace thompson
