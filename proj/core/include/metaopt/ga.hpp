#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "metaopt/problems.hpp"
#include "metaopt/run_stats.hpp"
#include "metaopt/rng.hpp"
#include "metaopt/search_space.hpp"
#include "metaopt/selection.hpp"

namespace metaopt {

struct RealIndividual {
    std::vector<double> genome;
    double fitness = 0.0;
};

enum class SelectionKind { Tournament, Fps, LinearRank, ExponentialRank };

struct GaConfig {
    std::size_t pop_size = 50;
    double p_c = 0.5;
    double eta_c = 15.0;
    double p_m = 0.01;
    double eta_m = 15.0;
    std::size_t tournament_size = 2;
    SelectionKind selection = SelectionKind::Tournament;
    double rank_s = 1.5;          // linear: [1,2]; exponential: near 0.99
    bool fps_sigma_scaling = false;
    double sigma_c = 2.0;

    void validate() const;
};

struct GaResult {
    RunStats stats;
    RealIndividual best;
};

// Fires after each completed generation with the best fitness present in the
// surviving population (not the best-so-far memory).
using GaObserver = std::function<void(std::int64_t generation, double population_best)>;

// Generational real-coded GA: mating selection, SBX at rate p_c, polynomial
// mutation of the parent population with the incumbent best immune, then
// tournament survival over parents + offspring with the pool best guaranteed
// to survive.  Stops when the evaluation budget is exhausted.
GaResult ga_run(const ScalarObjective& objective, const SearchSpace& space,
                const GaConfig& config, std::int64_t budget, Rng& rng,
                std::optional<double> closeness = std::nullopt,
                const std::vector<double>* initial_injection = nullptr,
                const GaObserver& observer = nullptr);

} // namespace metaopt
