#include <benchmark/benchmark.h>

#include "thompson/diagram.hpp"
#include "thompson/enumerate.hpp"
#include "thompson/permutation.hpp"
#include "thompson/stats.hpp"

using namespace thompson;

namespace {

const std::vector<PositiveWord>& sample_words() {
    static const auto words = random_elements(6, 6, 256, 1);
    return words;
}

void BM_OrbitCountGeneric(benchmark::State& state) {
    const auto& words = sample_words();
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(orbit_count(words[i++ % words.size()]));
}
BENCHMARK(BM_OrbitCountGeneric);

void BM_OrbitCountPositive(benchmark::State& state) {
    const auto& words = sample_words();
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(positive_orbit_count(words[i++ % words.size()]));
}
BENCHMARK(BM_OrbitCountPositive);

void BM_TraceComponents(benchmark::State& state) {
    std::vector<LinkDiagram> diagrams;
    for (const auto& w : sample_words()) diagrams.push_back(build_diagram(reduce(word_to_pair(w))));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(trace_components(diagrams[i++ % diagrams.size()]));
}
BENCHMARK(BM_TraceComponents);

void BM_VineMatching(benchmark::State& state) {
    const auto c = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(vine_matching(c));
}
BENCHMARK(BM_VineMatching)->Arg(16)->Arg(256)->Arg(4096);

void BM_Aggregate(benchmark::State& state) {
    const auto h = static_cast<PositiveWord::Exponent>(state.range(0));
    const auto jobs = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(aggregate(5, h, jobs).total());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(make_grid(5, h).size()));
}
BENCHMARK(BM_Aggregate)->Args({3, 1})->Args({5, 1})->Args({5, 4})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
