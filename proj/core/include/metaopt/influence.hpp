#pragma once

#include <cstddef>
#include <vector>

#include "metaopt/rng.hpp"

namespace metaopt {

// The flow-of-influence experiment: a 20-particle swarm over 100 clubs with
// a fixed membership level m (no joining or leaving), minimizing the plain
// coordinate sum.  All particles start uniform in [1000, 2000]^n except one
// seeded at the origin, and the recorded trace is the swarm-average current
// value per iteration (entry 0 is the initial average).
struct InfluenceParams {
    std::size_t swarm_size = 20;
    std::size_t clubs = 100;
    double w = 1.458; // random inertia range, mean matches the static 0.729
    double phi1 = 1.494;
    double phi2 = 1.494;
    double init_lo = 1000.0;
    double init_hi = 2000.0;
};

std::vector<double> influence_experiment(std::size_t membership_level, std::size_t dims,
                                         std::size_t iterations, Rng& rng,
                                         const InfluenceParams& params = {});

} // namespace metaopt
