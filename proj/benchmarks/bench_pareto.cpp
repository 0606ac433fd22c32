#include <benchmark/benchmark.h>

#include "metaopt/pareto.hpp"
#include "metaopt/rng.hpp"

using namespace metaopt;

namespace {
std::vector<ObjectiveVector> random_population(std::size_t n, std::size_t m) {
    Rng rng(7);
    std::vector<ObjectiveVector> pop(n);
    for (auto& f : pop) {
        f.resize(m);
        for (double& v : f) v = rng.uniform(0.0, 10.0);
    }
    return pop;
}
} // namespace

static void BM_FastNondominatedSort(benchmark::State& state) {
    const auto pop = random_population(state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(fast_nondominated_sort(pop));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FastNondominatedSort)->Range(50, 800)->Complexity();

static void BM_DominationCounts(benchmark::State& state) {
    const auto pop = random_population(state.range(0), 3);
    for (auto _ : state) benchmark::DoNotOptimize(domination_counts(pop));
}
BENCHMARK(BM_DominationCounts)->Arg(100)->Arg(200);

static void BM_CrowdingDistance(benchmark::State& state) {
    const auto pop = random_population(state.range(0), 3);
    std::vector<std::size_t> front(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) front[i] = i;
    for (auto _ : state) benchmark::DoNotOptimize(crowding_distance(pop, front));
}
BENCHMARK(BM_CrowdingDistance)->Arg(100)->Arg(400);
