#pragma once

#include <cstdint>
#include <vector>

#include "metaopt/pareto.hpp"
#include "metaopt/polyploid.hpp"
#include "metaopt/problems.hpp"
#include "metaopt/rng.hpp"

namespace metaopt {

struct Nsga2Config {
    std::size_t pop_size = 100;
    double p_c = 1.0;
    double eta_c = 20.0;
    double p_m = 0.0; // 0 means 1/n chosen at run time
    double eta_m = 15.0;

    void validate() const;
};

struct Nsga2Individual {
    std::vector<double> genome;
    ObjectiveVector objectives;
};

// Elitist multi-objective GA baseline: binary tournaments under the crowded
// comparison, SBX + polynomial mutation with the same operator settings as
// the polyploid runs, then front-by-front survival with crowding-distance
// truncation.  Operates on the [0, 1]^dims box.
std::vector<Nsga2Individual> nsga2_run(const VectorObjective& objective, std::size_t dims,
                                       const Nsga2Config& cfg, std::int64_t budget, Rng& rng,
                                       const MoeaObserver& observer = nullptr);

} // namespace metaopt
