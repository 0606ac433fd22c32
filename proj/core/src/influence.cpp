#include "metaopt/influence.hpp"

#include <limits>
#include <stdexcept>

#include "metaopt/clubs.hpp"
#include "metaopt/pso.hpp"

namespace metaopt {

std::vector<double> influence_experiment(std::size_t membership_level, std::size_t dims,
                                         std::size_t iterations, Rng& rng,
                                         const InfluenceParams& params) {
    if (membership_level < 1 || membership_level > params.clubs)
        throw std::invalid_argument("influence_experiment: membership level out of range");
    const std::size_t n = params.swarm_size;

    auto value = [](const std::vector<double>& x) {
        double s = 0.0;
        for (double xi : x) s += xi;
        return s;
    };

    std::vector<Particle> swarm(n);
    const double half = 0.5 * (params.init_hi - params.init_lo);
    for (std::size_t i = 0; i < n; ++i) {
        Particle& p = swarm[i];
        p.x.resize(dims);
        p.v.resize(dims);
        for (double& xd : p.x) xd = rng.uniform(params.init_lo, params.init_hi);
        for (double& vd : p.v) vd = rng.uniform(-half, half);
        p.pbest_x = p.x;
        p.pbest_f = std::numeric_limits<double>::infinity();
    }
    // The influence source: one particle seeded at the origin.
    swarm[0].x.assign(dims, 0.0);
    swarm[0].pbest_x = swarm[0].x;

    // Membership stays fixed at exactly m clubs per particle for the whole
    // run; min = max = m makes every join/leave impossible.
    ClubRegistry registry(n, params.clubs, membership_level, membership_level, membership_level,
                          /*retention_period=*/1);
    registry.randomize_membership(rng);

    PsoConfig cfg;
    cfg.swarm_size = n;
    cfg.w = params.w;
    cfg.random_inertia = true;
    cfg.chi = 1.0;
    cfg.phi1 = params.phi1;
    cfg.phi2 = params.phi2;
    cfg.topology = Topology::Clubs;

    std::vector<double> pbest_values(n, std::numeric_limits<double>::infinity());
    std::vector<double> trace;
    trace.reserve(iterations + 1);

    for (std::size_t iter = 0; iter <= iterations; ++iter) {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double f = value(swarm[i].x);
            sum += f;
            if (f < swarm[i].pbest_f) {
                swarm[i].pbest_f = f;
                swarm[i].pbest_x = swarm[i].x;
                pbest_values[i] = f;
            }
        }
        trace.push_back(sum / static_cast<double>(n));
        if (iter == iterations) break;

        for (std::size_t i = 0; i < n; ++i) {
            Particle& p = swarm[i];
            const std::size_t g = neighborhood_best(i, Topology::Clubs, &registry, pbest_values);
            p.v = velocity_update(p, swarm[g].pbest_x, cfg, {}, rng);
            for (std::size_t d = 0; d < dims; ++d) p.x[d] += p.v[d];
        }
    }
    return trace;
}

} // namespace metaopt
