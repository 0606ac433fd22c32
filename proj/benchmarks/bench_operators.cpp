#include <benchmark/benchmark.h>

#include "metaopt/problems.hpp"
#include "metaopt/pso.hpp"
#include "metaopt/variation.hpp"

using namespace metaopt;

static void BM_SbxCrossover(benchmark::State& state) {
    const std::size_t dims = state.range(0);
    Rng rng(1);
    std::vector<double> p1(dims), p2(dims);
    for (std::size_t i = 0; i < dims; ++i) {
        p1[i] = rng.uniform(-5, 5);
        p2[i] = rng.uniform(-5, 5);
    }
    for (auto _ : state) {
        auto pair = sbx_crossover(p1, p2, 15.0, rng);
        benchmark::DoNotOptimize(pair);
    }
}
BENCHMARK(BM_SbxCrossover)->Arg(5)->Arg(30);

static void BM_PolynomialMutation(benchmark::State& state) {
    const std::size_t dims = state.range(0);
    Rng rng(2);
    std::vector<double> lower(dims, -5.0), upper(dims, 5.0), x(dims, 0.5);
    for (auto _ : state) {
        polynomial_mutation_inplace(x, lower, upper, 0.01, 15.0, rng);
        benchmark::DoNotOptimize(x.data());
    }
}
BENCHMARK(BM_PolynomialMutation)->Arg(5)->Arg(30);

static void BM_VelocityUpdate(benchmark::State& state) {
    const std::size_t dims = state.range(0);
    Rng rng(3);
    PsoConfig cfg;
    cfg.random_inertia = true;
    cfg.w = 1.4;
    Particle p;
    p.x.assign(dims, 1.0);
    p.v.assign(dims, 0.5);
    p.pbest_x.assign(dims, 0.0);
    const std::vector<double> guide(dims, -1.0), vmax(dims, 5.12);
    for (auto _ : state) {
        auto v = velocity_update(p, guide, cfg, vmax, rng);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_VelocityUpdate)->Arg(30);

static void BM_Rastrigin(benchmark::State& state) {
    Rng rng(4);
    std::vector<double> x(30);
    for (double& v : x) v = rng.uniform(-5.12, 5.12);
    for (auto _ : state) benchmark::DoNotOptimize(eval_single(ObjectiveId::Rastrigin, x));
}
BENCHMARK(BM_Rastrigin);

static void BM_Dtlz2(benchmark::State& state) {
    Rng rng(5);
    std::vector<double> x(30);
    for (double& v : x) v = rng.uniform01();
    for (auto _ : state) benchmark::DoNotOptimize(eval_dtlz(ObjectiveId::DTLZ2, x, 3));
}
BENCHMARK(BM_Dtlz2);
