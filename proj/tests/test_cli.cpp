#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = thompson::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("thompson_cli_test_" + name);
    fs::remove_all(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("perm") {
    auto r = run({"perm", "0,0,1"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "(0,2)(1,6,3,5,7,4)  orbits=2");
    CHECK(r.out.find("leaves=7") != std::string::npos);

    CHECK(first_line(run({"perm", ""}).out) == "(0,1)  orbits=1");
    CHECK(first_line(run({"perm"}).out) == "(0,1)  orbits=1");
    CHECK(first_line(run({"perm", "--word", "1"}).out) == "(0,4,1,3,5,2)  orbits=1");

    r = run({"perm", "0,q,1"});
    CHECK(r.code != 0);
    CHECK(r.err.find("'q'") != std::string::npos);

    r = run({"perm", "1", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"orbits\"") != std::string::npos);
}

TEST_CASE("stats summary rows") {
    CHECK(run({"stats", "-w", "4", "-H", "2"}).out.find("\n4,2,81,4,\"2\"\n") != std::string::npos);
    CHECK(run({"stats", "-w", "2", "-H", "0"}).out.find("\n2,0,1,1,\"1\"\n") != std::string::npos);
    CHECK(run({"stats", "--width", "5", "--height", "1"}).out.find("\n5,1,32,3,\"1\"\n") != std::string::npos);

    const auto r = run({"stats", "-w", "4", "-H", "0..3", "--jobs", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "width,height,total,max_orbits,largest_classes\n4,0,1,1,\"1\"\n4,1,16,2,\"1,2\"\n"
                   "4,2,81,4,\"2\"\n4,3,256,6,\"2\"\n");
}

TEST_CASE("stats writes files") {
    const fs::path dir = scratch_dir("stats");
    REQUIRE(run({"stats", "-w", "3", "-H", "1..2", "--out", dir.string()}).code == 0);
    CHECK(fs::exists(dir / "histogram.csv"));
    CHECK(slurp(dir / "summary.csv").rfind("width,height", 0) == 0);

    REQUIRE(run({"stats", "-w", "3", "-H", "1..2", "--out", dir.string(), "--format", "json"}).code == 0);
    CHECK(fs::exists(dir / "stats.json"));

    REQUIRE(run({"stats", "-w", "3", "-H", "1..2", "--out", dir.string(), "--format", "svg"}).code == 0);
    CHECK(slurp(dir / "histogram_w3_h2.svg").rfind("<svg", 0) == 0);
    CHECK(fs::exists(dir / "histogram_w3_h1.svg"));

    const std::string before = slurp(dir / "summary.csv");
    REQUIRE(run({"stats", "-w", "3", "-H", "1..2", "--out", dir.string(), "--jobs", "8"}).code == 0);
    CHECK(slurp(dir / "summary.csv") == before);
    fs::remove_all(dir);
}

TEST_CASE("stats rejects bad input") {
    const fs::path dir = scratch_dir("blocked");
    {
        std::ofstream(dir.string()) << "a file, not a directory";
    }
    auto r = run({"stats", "-w", "2", "-H", "1", "--out", dir.string()});
    CHECK(r.code != 0);
    CHECK_FALSE(r.err.empty());
    fs::remove(dir);

    CHECK(run({"stats", "-w", "0", "-H", "1"}).code != 0);
    CHECK(run({"stats", "-w", "2", "-H", "3..1"}).code != 0);
    CHECK(run({"stats", "-w", "2", "-H", "x"}).code != 0);
    CHECK(run({"stats", "-w", "2"}).code != 0);
    CHECK(run({"stats", "-w", "2", "-H", "1", "--jobs", "0"}).code != 0);
    CHECK(run({"stats", "-w", "2", "-H", "1", "--format", "pd"}).code != 0);
}

TEST_CASE("verify") {
    CHECK(run({"verify", "-w", "3", "-H", "2"}).out == "27/27 agree\n");
    CHECK(run({"verify", "-w", "1", "-H", "0"}).out == "1/1 agree\n");
    const auto r = run({"verify", "-w", "4", "-H", "2"});
    CHECK(r.out == "81/81 agree\n");
    CHECK(r.code == 0);
}

TEST_CASE("export") {
    auto r = run({"export", ""});
    CHECK(r.code == 0);
    CHECK(r.out == "components=1 crossings=0\n");

    r = run({"export", "1", "--format", "pd"});
    CHECK(first_line(r.out) == "components=1 crossings=4");

    r = run({"export", "0,0,1", "--format", "gauss", "--crossing-convention", "middle-parent-over"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "components=2 crossings=6");

    const fs::path file = fs::temp_directory_path() / "thompson_cli_test_x2.pd";
    REQUIRE(run({"export", "--word", "0,0,1", "--out", file.string()}).code == 0);
    CHECK(slurp(file) == run({"export", "0,0,1"}).out);
    fs::remove(file);

    CHECK(run({"export", "1", "--format", "dt"}).code != 0);
    CHECK(run({"export", "1", "--crossing-convention", "sideways"}).code != 0);
}

TEST_CASE("random") {
    const auto a = run({"random", "-w", "3", "-H", "4", "--count", "20", "--seed", "5"});
    CHECK(a.code == 0);
    CHECK(a.out == run({"random", "-w", "3", "-H", "4", "--count", "20", "--seed", "5"}).out);
    CHECK(a.out != run({"random", "-w", "3", "-H", "4", "--count", "20", "--seed", "6"}).out);
    CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 21);
    CHECK(run({"random", "-w", "2", "-H", "1", "--count", "0"}).out == "word,orbits\n");
    CHECK(run({"random", "-w", "2", "-H", "1", "--count", "3", "--format", "json"}).out.rfind("{\n  \"samples\"", 0) == 0);
}

TEST_CASE("conjectures") {
    const auto r = run({"conjectures", "-w", "4", "-H", "1..4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"all_pass\": true") != std::string::npos);
}

TEST_CASE("argument errors") {
    CHECK(run({}).code != 0);
    CHECK(run({"frobnicate"}).code != 0);
    CHECK(run({"perm", "1", "--bogus"}).code != 0);
    CHECK(run({"--help"}).code == 0);
}

}  // TEST_SUITE
