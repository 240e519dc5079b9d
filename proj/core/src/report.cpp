#include "thompson/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace thompson {

namespace {

using nlohmann::json;

std::string join_classes(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

json record_json(const StatsRecord& r) {
    json hist = json::array();
    for (const auto& [orbits, count] : r.histogram) hist.push_back({{"orbits", orbits}, {"count", count}});
    json j{{"width", r.width},
           {"height", r.height},
           {"total", r.total()},
           {"max_orbits", r.max_orbits()},
           {"largest_classes", r.largest_classes()},
           {"histogram", std::move(hist)}};
    if (r.cumulative) j["cumulative"] = true;
    return j;
}

}  // namespace

std::string histogram_csv(std::span<const StatsRecord> records) {
    std::ostringstream os;
    os << "width,height,orbits,count\n";
    for (const auto& r : records) {
        for (const auto& [orbits, count] : r.histogram) {
            os << r.width << ',' << r.height << ',' << orbits << ',' << count << '\n';
        }
    }
    return os.str();
}

std::string summary_csv_row(const StatsRecord& r) {
    std::ostringstream os;
    os << r.width << ',' << r.height << ',' << r.total() << ',' << r.max_orbits() << ",\""
       << join_classes(r.largest_classes()) << '"';
    return os.str();
}

std::string summary_csv(std::span<const StatsRecord> records) {
    std::string out = "width,height,total,max_orbits,largest_classes\n";
    for (const auto& r : records) out += summary_csv_row(r) + "\n";
    return out;
}

std::string stats_json(std::span<const StatsRecord> records) {
    json arr = json::array();
    for (const auto& r : records) arr.push_back(record_json(r));
    return json{{"records", std::move(arr)}}.dump(2) + "\n";
}

std::string histogram_svg(const StatsRecord& r) {
    constexpr int kWidth = 640;
    constexpr int kHeight = 360;
    constexpr int kMargin = 40;
    const std::size_t bars = std::max<std::size_t>(r.max_orbits(), 1);
    std::uint64_t tallest = 1;
    for (const auto& [orbits, count] : r.histogram) tallest = std::max(tallest, count);
    const double slot = static_cast<double>(kWidth - 2 * kMargin) / static_cast<double>(bars);
    const double plot = kHeight - 2 * kMargin;

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    os << "<title>width " << r.width << ", height " << r.height << "</title>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"14\">w=" << r.width << " h=" << r.height << " (" << r.total() << " elements)</text>\n";
    os << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin
       << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
    os.setf(std::ios::fixed);
    os.precision(2);
    for (const auto& [orbits, count] : r.histogram) {
        const double h = plot * static_cast<double>(count) / static_cast<double>(tallest);
        const double x = kMargin + slot * static_cast<double>(orbits - 1) + slot * 0.1;
        const double y = kHeight - kMargin - h;
        os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << slot * 0.8 << "\" height=\"" << h
           << "\" fill=\"steelblue\"><title>" << orbits << " orbits: " << count << "</title></rect>\n";
        os << "<text x=\"" << x + slot * 0.4 << "\" y=\"" << kHeight - kMargin + 14
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"10\">" << orbits << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string conjecture_json(const ConjectureReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        checks.push_back({{"item", c.item},
                          {"width", c.width},
                          {"height", c.height},
                          {"claim", c.claim},
                          {"predicted", c.predicted},
                          {"observed", c.observed},
                          {"pass", c.holds}});
    }
    json table = json::array();
    for (const auto& t : report.table) {
        table.push_back({{"width", t.row.width},
                         {"height", t.row.height},
                         {"published_max_orbits", t.row.max_orbits},
                         {"published_largest_classes", t.row.largest_classes},
                         {"published_total", t.row.printed_total},
                         {"max_orbits", t.max_orbits},
                         {"largest_classes", t.largest_classes},
                         {"total", t.total},
                         {"pass", t.holds()}});
    }
    return json{{"all_pass", report.all_hold()}, {"conjectures", std::move(checks)}, {"table", std::move(table)}}
               .dump(2) +
           "\n";
}

std::string permutation_json(const PositiveWord& w, std::size_t leaves, const ThompsonPermutation& p) {
    return json{{"word", w.exponents()}, {"leaves", leaves}, {"orbits", p.orbit_count()}, {"cycles", p.cycles()}}
               .dump() +
           "\n";
}

std::string samples_csv(std::span<const Sample> samples) {
    std::ostringstream os;
    os << "word,orbits\n";
    for (const auto& s : samples) os << '"' << s.word.to_string() << "\"," << s.orbits << '\n';
    return os.str();
}

std::string samples_json(std::span<const Sample> samples) {
    json arr = json::array();
    for (const auto& s : samples) arr.push_back({{"word", s.word.exponents()}, {"orbits", s.orbits}});
    return json{{"samples", std::move(arr)}}.dump(2) + "\n";
}

}  // namespace thompson
