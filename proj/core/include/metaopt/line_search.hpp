#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "metaopt/problems.hpp"
#include "metaopt/run_stats.hpp"
#include "metaopt/rng.hpp"
#include "metaopt/search_space.hpp"

namespace metaopt {

struct LsConfig {
    // Per-dimension step; empty means 0.1% of the initialization range.
    std::vector<double> step;
    std::int64_t max_evals = 100000;

    void validate(const SearchSpace& space) const;
};

struct LsResult {
    RunStats stats;
    std::vector<double> best_x;
    double best_f = 0.0;
};

// Deterministic axis-step local descent.  From a random start the 2n
// neighbors at +-step are evaluated each sweep; the walk moves to the best
// neighbor while its fitness is less than or equal to the current value and
// terminates when every neighbor is strictly worse, when a tie move would
// revisit a recent point (plateau cycle guard), or when the evaluation
// budget runs out.  Ties between equally good neighbors resolve to the
// lowest dimension, + direction first.
LsResult ls_run(const ScalarObjective& objective, const SearchSpace& space, const LsConfig& cfg,
                Rng& rng, std::optional<double> closeness = std::nullopt);

} // namespace metaopt
