#include <benchmark/benchmark.h>

#include "metaopt/motor.hpp"

using namespace metaopt;

static void BM_FluxDerivatives(benchmark::State& state) {
    const MotorParams p = true_motor_params();
    MotorState s{0.5, -0.3, 0.4, 0.1, 250.0};
    for (auto _ : state) benchmark::DoNotOptimize(flux_derivatives(s, p, 311.0, 50.0));
}
BENCHMARK(BM_FluxDerivatives);

static void BM_StartupSimulation(benchmark::State& state) {
    const MotorParams p = true_motor_params();
    const SupplyWaveform supply{};
    const double duration = static_cast<double>(state.range(0)) / 100.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(simulate_startup(p, supply, duration, 200));
    state.SetLabel("duration " + std::to_string(duration) + " s");
}
BENCHMARK(BM_StartupSimulation)->Arg(20)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_IdentificationFitness(benchmark::State& state) {
    const SupplyWaveform supply{};
    const IdentProblem prob = IdentProblem::make(true_motor_params(), supply, 0.2, 200);
    MotorParams candidate = true_motor_params();
    candidate.Rs *= 1.1;
    candidate.Lm *= 0.9;
    for (auto _ : state) benchmark::DoNotOptimize(prob.fitness(candidate));
}
BENCHMARK(BM_IdentificationFitness)->Unit(benchmark::kMillisecond);
