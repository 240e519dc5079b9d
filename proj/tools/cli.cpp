#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "thompson/conjectures.hpp"
#include "thompson/diagram.hpp"
#include "thompson/enumerate.hpp"
#include "thompson/permutation.hpp"
#include "thompson/report.hpp"
#include "thompson/stats.hpp"

namespace thompson::cli {

namespace {

struct Range {
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;
};

std::uint32_t parse_uint(std::string_view text, const char* what) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw std::invalid_argument(std::string("invalid ") + what + " '" + std::string(text) + "'");
    }
    return v;
}

// "5" or "0..8".
Range parse_range(std::string_view text, const char* what) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = parse_uint(text, what);
        return {v, v};
    }
    Range r{parse_uint(text.substr(0, dots), what), parse_uint(text.substr(dots + 2), what)};
    if (r.lo > r.hi) throw std::invalid_argument(std::string("empty ") + what + " range '" + std::string(text) + "'");
    return r;
}

Range parse_widths(std::string_view text) {
    const Range r = parse_range(text, "width");
    if (r.lo == 0) throw std::invalid_argument("width must be at least 1");
    return r;
}

void write_file(const std::filesystem::path& path, const std::string& body) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << body;
    if (!f) throw std::runtime_error("cannot write " + path.string());
}

void emit(const std::string& out_path, const std::string& body, std::ostream& out) {
    if (out_path.empty()) {
        out << body;
    } else {
        write_file(out_path, body);
    }
}

std::vector<StatsRecord> aggregate_grid(const Range& widths, const Range& heights, unsigned jobs) {
    std::vector<StatsRecord> records;
    for (std::uint32_t w = widths.lo; w <= widths.hi; ++w) {
        for (std::uint32_t h = heights.lo; h <= heights.hi; ++h) records.push_back(aggregate(w, h, jobs));
    }
    return records;
}

struct Options {
    std::string word;
    std::string width = "1";
    std::string height = "0";
    std::size_t count = 0;
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::string out_path;
    std::string format;
    std::string convention = "left-right-over";
};

int cmd_perm(const Options& o, std::ostream& out) {
    const PositiveWord w = PositiveWord::parse(o.word);
    const TreePair p = reduce(word_to_pair(w));
    const ThompsonPermutation perm = permutation_of_pair(p);
    if (o.format == "json") {
        emit(o.out_path, permutation_json(w, p.leaf_count(), perm), out);
    } else {
        std::ostringstream os;
        os << perm.to_string() << "  orbits=" << perm.orbit_count() << "\nleaves=" << p.leaf_count() << "\n";
        emit(o.out_path, os.str(), out);
    }
    return 0;
}

int cmd_stats(const Options& o, std::ostream& out) {
    const auto records = aggregate_grid(parse_widths(o.width), parse_range(o.height, "height"), o.jobs);
    const std::string format = o.format.empty() ? "csv" : o.format;
    if (o.out_path.empty()) {
        if (format == "json") {
            out << stats_json(records);
        } else if (format == "csv" || format == "text") {
            out << summary_csv(records);
        } else {
            throw std::invalid_argument("format '" + format + "' needs --out");
        }
        return 0;
    }

    const std::filesystem::path dir(o.out_path);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) throw std::runtime_error("cannot create directory " + dir.string());
    if (format == "csv" || format == "text") {
        write_file(dir / "histogram.csv", histogram_csv(records));
        write_file(dir / "summary.csv", summary_csv(records));
    } else if (format == "json") {
        write_file(dir / "stats.json", stats_json(records));
    } else if (format == "svg") {
        for (const auto& r : records) {
            write_file(dir / ("histogram_w" + std::to_string(r.width) + "_h" + std::to_string(r.height) + ".svg"),
                       histogram_svg(r));
        }
        write_file(dir / "summary.csv", summary_csv(records));
    } else {
        throw std::invalid_argument("unsupported stats format '" + format + "'");
    }
    out << summary_csv(records);
    return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    const Range widths = parse_widths(o.width);
    const Range heights = parse_range(o.height, "height");
    std::uint64_t checked = 0;
    std::uint64_t agreed = 0;
    for (std::uint32_t wd = widths.lo; wd <= widths.hi; ++wd) {
        for (std::uint32_t h = heights.lo; h <= heights.hi; ++h) {
            const Grid grid = make_grid(wd, h);
            for_each_element(grid, 0, grid.size(), [&](const PositiveWord& w) {
                ++checked;
                const TreePair p = reduce(word_to_pair(w));
                const std::size_t orbits = permutation_of_pair(p).orbit_count();
                const std::size_t fast = positive_orbit_count(w);
                const std::size_t components = trace_components(build_diagram(p));
                if (orbits == components && fast == orbits) {
                    ++agreed;
                } else {
                    err << "mismatch for word " << w << ": orbits=" << orbits << " fast=" << fast
                        << " components=" << components << "\n";
                }
            });
        }
    }
    out << agreed << "/" << checked << " agree\n";
    return agreed == checked ? 0 : 1;
}

int cmd_export(const Options& o, std::ostream& out) {
    const CodeFormat format = parse_code_format(o.format.empty() ? "pd" : o.format);
    DiagramOptions opts;
    opts.convention = parse_crossing_convention(o.convention);
    const TreePair p = reduce(word_to_pair(PositiveWord::parse(o.word)));
    emit(o.out_path, export_code(build_diagram(p, opts), format), out);
    return 0;
}

int cmd_random(const Options& o, std::ostream& out) {
    const std::uint32_t w = parse_uint(o.width, "width");
    const std::uint32_t h = parse_uint(o.height, "height");
    std::vector<Sample> samples;
    for (auto& word : random_elements(w, h, o.count, o.seed)) {
        const std::size_t orbits = positive_orbit_count(word);
        samples.push_back({std::move(word), orbits});
    }
    const std::string format = o.format.empty() ? "csv" : o.format;
    if (format == "json") {
        emit(o.out_path, samples_json(samples), out);
    } else if (format == "csv" || format == "text") {
        emit(o.out_path, samples_csv(samples), out);
    } else {
        throw std::invalid_argument("unsupported random format '" + format + "'");
    }
    return 0;
}

int cmd_conjectures(const Options& o, std::ostream& out) {
    const auto records = aggregate_grid(parse_widths(o.width), parse_range(o.height, "height"), o.jobs);
    emit(o.out_path, conjecture_json(check_conjectures(records)), out);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Thompson permutations and link components of positive F_3 elements", "thompson"};
    app.require_subcommand(1, 1);
    Options o;

    auto add_grid = [&](CLI::App* sub) {
        sub->add_option("-w,--width", o.width, "Width bound, or a range such as 2..7")->required();
        sub->add_option("-H,--height", o.height, "Height bound, or a range such as 0..8")->required();
    };
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
    };
    auto add_word = [&](CLI::App* sub) {
        sub->add_option("word,--word", o.word, "Exponents a_0,a_1,... (empty for the identity)");
    };
    auto add_out = [&](CLI::App* sub, const std::string& what) { sub->add_option("--out", o.out_path, what); };

    auto* perm = app.add_subcommand("perm", "Print the Thompson permutation of a positive word");
    add_word(perm);
    perm->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    add_out(perm, "Output file");

    auto* stats = app.add_subcommand("stats", "Orbit-count histograms over width/height grids");
    add_grid(stats);
    add_jobs(stats);
    stats->add_option("--format", o.format, "csv, json, svg or text")
        ->check(CLI::IsMember({"csv", "json", "svg", "text"}));
    add_out(stats, "Output directory");

    auto* verify = app.add_subcommand("verify", "Compare orbit counts with traced diagram components");
    add_grid(verify);

    auto* exp = app.add_subcommand("export", "Export the closure diagram as PD or Gauss code");
    add_word(exp);
    exp->add_option("--format", o.format, "pd or gauss");
    exp->add_option("--crossing-convention", o.convention, "left-right-over (standard) or middle-parent-over");
    add_out(exp, "Output file");

    auto* rnd = app.add_subcommand("random", "Sample positive words uniformly from a grid");
    add_grid(rnd);
    rnd->add_option("--count", o.count, "Number of samples");
    rnd->add_option("--seed", o.seed, "Generator seed");
    rnd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json", "text"}));
    add_out(rnd, "Output file");

    auto* conj = app.add_subcommand("conjectures", "Evaluate the width/height conjectures as JSON");
    add_grid(conj);
    add_jobs(conj);
    add_out(conj, "Output file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*perm) return cmd_perm(o, out);
        if (*stats) return cmd_stats(o, out);
        if (*verify) return cmd_verify(o, out, err);
        if (*exp) return cmd_export(o, out);
        if (*rnd) return cmd_random(o, out);
        if (*conj) return cmd_conjectures(o, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace thompson::cli
