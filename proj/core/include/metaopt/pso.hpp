#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "metaopt/clubs.hpp"
#include "metaopt/problems.hpp"
#include "metaopt/run_stats.hpp"
#include "metaopt/rng.hpp"
#include "metaopt/search_space.hpp"

namespace metaopt {

struct Particle {
    std::vector<double> x;
    std::vector<double> v;
    std::vector<double> pbest_x;
    double pbest_f = 0.0;
};

enum class Topology { Gbest, LbestRing, Clubs };

struct ClubParams {
    std::size_t clubs = 100;
    std::size_t default_level = 10;
    std::size_t min_level = 5;
    std::size_t max_level = 33;
    std::size_t retention_period = 2;
};

struct PsoConfig {
    std::size_t swarm_size = 20;
    double w = 0.729;
    bool random_inertia = false; // inertia drawn fresh per component from U(0, w)
    double chi = 1.0;
    double phi1 = 1.494;
    double phi2 = 1.494;
    Topology topology = Topology::Gbest;
    ClubParams clubs;

    void validate() const;
};

// One velocity update:
//   v' = chi * (W*v + phi1*r1*(pbest - x) + phi2*r2*(guide - x))
// componentwise with fresh r1, r2 per component; W is the static inertia or,
// with random_inertia, a fresh U(0, w) draw per component.  The result is
// clamped to [-vmax, vmax] per dimension when the space defines vmax.
// Draw order per component: W (if random), r1, r2.
std::vector<double> velocity_update(const Particle& p, std::span<const double> guide,
                                    const PsoConfig& cfg, std::span<const double> vmax,
                                    Rng& rng);

// Index of the guide particle for particle i: the argmin of pbest values
// over the topology neighborhood (ties to the lowest index).
std::size_t neighborhood_best(std::size_t i, Topology topology, const ClubRegistry* registry,
                              std::span<const double> pbest_values);

struct PsoResult {
    RunStats stats;
    std::vector<double> best_x;
    double best_f = 0.0;
};

PsoResult pso_run(const ScalarObjective& objective, const SearchSpace& space,
                  const PsoConfig& cfg, std::int64_t budget, Rng& rng,
                  std::optional<double> closeness = std::nullopt,
                  const std::vector<double>* initial_injection = nullptr);

} // namespace metaopt
