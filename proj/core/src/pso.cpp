#include "metaopt/pso.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace metaopt {

void PsoConfig::validate() const {
    if (swarm_size == 0) throw std::invalid_argument("PsoConfig: empty swarm");
    if (phi1 < 0.0 || phi2 < 0.0)
        throw std::invalid_argument("PsoConfig: learning rates must be non-negative");
    if (topology == Topology::Clubs) {
        if (clubs.min_level < 1 || clubs.min_level > clubs.default_level ||
            clubs.default_level > clubs.max_level || clubs.max_level > clubs.clubs)
            throw std::invalid_argument("PsoConfig: club levels out of order");
    }
}

std::vector<double> velocity_update(const Particle& p, std::span<const double> guide,
                                    const PsoConfig& cfg, std::span<const double> vmax,
                                    Rng& rng) {
    const std::size_t dims = p.x.size();
    if (guide.size() != dims) throw std::invalid_argument("velocity_update: dimension mismatch");
    std::vector<double> v(dims);
    for (std::size_t d = 0; d < dims; ++d) {
        const double w = cfg.random_inertia ? rng.uniform(0.0, cfg.w) : cfg.w;
        const double r1 = rng.uniform01();
        const double r2 = rng.uniform01();
        double vd = cfg.chi * (w * p.v[d] + cfg.phi1 * r1 * (p.pbest_x[d] - p.x[d]) +
                               cfg.phi2 * r2 * (guide[d] - p.x[d]));
        if (!vmax.empty()) vd = std::clamp(vd, -vmax[d], vmax[d]);
        v[d] = vd;
    }
    return v;
}

std::size_t neighborhood_best(std::size_t i, Topology topology, const ClubRegistry* registry,
                              std::span<const double> pbest_values) {
    const std::size_t n = pbest_values.size();
    if (i >= n) throw std::invalid_argument("neighborhood_best: index out of range");

    auto argmin = [&](auto begin, auto end) {
        std::size_t best = *begin;
        for (auto it = begin; it != end; ++it)
            if (pbest_values[*it] < pbest_values[best]) best = *it;
        return best;
    };

    switch (topology) {
    case Topology::Gbest: {
        std::size_t best = 0;
        for (std::size_t j = 1; j < n; ++j)
            if (pbest_values[j] < pbest_values[best]) best = j;
        return best;
    }
    case Topology::LbestRing: {
        const std::size_t neighbors[3] = {(i + n - 1) % n, i, (i + 1) % n};
        return argmin(std::begin(neighbors), std::end(neighbors));
    }
    case Topology::Clubs: {
        if (!registry) throw std::invalid_argument("neighborhood_best: missing club registry");
        const auto nb = registry->neighborhood(i);
        return argmin(nb.begin(), nb.end());
    }
    }
    throw std::logic_error("neighborhood_best: unknown topology");
}

PsoResult pso_run(const ScalarObjective& objective, const SearchSpace& space,
                  const PsoConfig& cfg, std::int64_t budget, Rng& rng,
                  std::optional<double> closeness,
                  const std::vector<double>* initial_injection) {
    cfg.validate();
    space.validate();
    const std::size_t n = cfg.swarm_size;
    const std::size_t dims = space.dims;
    if (budget < static_cast<std::int64_t>(n))
        throw std::invalid_argument("pso_run: budget below swarm size");

    PsoResult result;
    RunStats& stats = result.stats;
    stats.evals_per_iteration = static_cast<std::int64_t>(n);
    result.best_f = std::numeric_limits<double>::infinity();

    // Initialization is particle-major, dimension-minor: position components
    // first, then velocity components, so seeded replays are exact.
    std::vector<Particle> swarm(n);
    for (std::size_t i = 0; i < n; ++i) {
        Particle& p = swarm[i];
        p.x = sample_uniform(space, rng);
        p.v.resize(dims);
        for (std::size_t d = 0; d < dims; ++d) {
            // Without a velocity cap the initial speed spans the width of the
            // initialization range, centered at zero.
            const double half =
                space.vmax.empty() ? 0.5 * (space.init_hi[d] - space.init_lo[d]) : space.vmax[d];
            p.v[d] = rng.uniform(-half, half);
        }
        if (i == 0 && initial_injection) p.x = *initial_injection;
        apply_boundary(space, p.x);
        p.pbest_x = p.x;
        p.pbest_f = std::numeric_limits<double>::infinity();
    }

    std::unique_ptr<ClubRegistry> registry;
    if (cfg.topology == Topology::Clubs) {
        registry = std::make_unique<ClubRegistry>(n, cfg.clubs.clubs, cfg.clubs.default_level,
                                                  cfg.clubs.min_level, cfg.clubs.max_level,
                                                  cfg.clubs.retention_period);
        registry->randomize_membership(rng);
    }

    std::vector<double> pbest_values(n, std::numeric_limits<double>::infinity());
    std::int64_t iteration = 0;

    while (stats.evals_used < budget) {
        ++iteration;

        for (std::size_t i = 0; i < n && stats.evals_used < budget; ++i) {
            Particle& p = swarm[i];
            const double f = objective(p.x);
            stats.record(f, iteration, closeness);
            if (f < p.pbest_f) {
                p.pbest_f = f;
                p.pbest_x = p.x;
                pbest_values[i] = f;
                if (f < result.best_f) {
                    result.best_f = f;
                    result.best_x = p.x;
                }
            }
        }
        if (stats.evals_used >= budget) break;

        for (std::size_t i = 0; i < n; ++i) {
            Particle& p = swarm[i];
            const std::size_t g = neighborhood_best(i, cfg.topology, registry.get(), pbest_values);
            p.v = velocity_update(p, swarm[g].pbest_x, cfg, space.vmax, rng);
            for (std::size_t d = 0; d < dims; ++d) p.x[d] += p.v[d];
            apply_boundary(space, p.x);
        }

        if (registry) registry->update(pbest_values, iteration, rng);
    }

    stats.finish();
    return result;
}

} // namespace metaopt
