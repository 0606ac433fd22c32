#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "metaopt/pareto.hpp"
#include "metaopt/problems.hpp"
#include "metaopt/rng.hpp"

namespace metaopt {

// Solution vector with d chromosomes: the dominant-alleles-set that alone
// determines fitness, plus d-1 redundant chromosomes carried unevaluated.
struct PolyploidVector {
    std::vector<double> das;
    std::vector<std::vector<double>> redundant;
    ObjectiveVector objectives;

    std::size_t ploidy() const { return redundant.size() + 1; }
};

struct PolyploidConfig {
    std::size_t pop_size = 100;
    std::size_t ploidy = 2;   // d >= 1
    double p_c = 1.0;
    double eta_c = 20.0;
    double p_m = 0.0;         // 0 means 1/n chosen at run time
    double eta_m = 15.0;

    void validate() const;
};

// One mating event.  Each parent is collapsed to a representative chromosome
// by a uniform per-locus pick over its d chromosomes; the child DAS is the
// SBX of the representatives followed by polynomial mutation and a clamp to
// the box.  The child's d-1 redundant chromosomes are copied unmutated,
// uniformly from the 2d parent chromosomes.
PolyploidVector polyploid_mate(const PolyploidVector& p1, const PolyploidVector& p2,
                               const PolyploidConfig& cfg, double p_m,
                               std::span<const double> lower, std::span<const double> upper,
                               Rng& rng);

// One generation: the nondominated members mate (random pairing without
// replacement, odd leftover re-paired at random, pairing with replacement
// when the pool has fewer than two members), offspring are evaluated, and
// the N least-dominated of parents + offspring survive with random
// tie-breaking.  Returns the number of objective evaluations spent.
std::size_t polyploid_generation(std::vector<PolyploidVector>& pop, const PolyploidConfig& cfg,
                                 const VectorObjective& objective, double p_m,
                                 std::span<const double> lower, std::span<const double> upper,
                                 Rng& rng);

struct ExtractionStats {
    double avg_distance_original = 0.0;
    double avg_distance_extracted = 0.0;
    double pct_dominated = 0.0;
};

// Evaluates every chromosome of every solution vector as a phenotype (the
// extracted population of size N*d) and reports the extraction statistics.
ExtractionStats extract_population(const std::vector<PolyploidVector>& pop,
                                   const VectorObjective& objective,
                                   const std::function<double(std::span<const double>)>& distance);

// Full run over a [lower, upper] box.  The observer fires after the initial
// evaluation and after every generation.
using MoeaObserver =
    std::function<void(std::int64_t evals, const std::vector<ObjectiveVector>& objectives)>;

std::vector<PolyploidVector> polyploid_run(const VectorObjective& objective, std::size_t dims,
                                           const PolyploidConfig& cfg, std::int64_t budget,
                                           Rng& rng, const MoeaObserver& observer = nullptr);

} // namespace metaopt
