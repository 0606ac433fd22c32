#include "metaopt/line_search.hpp"

#include <deque>
#include <limits>
#include <stdexcept>

namespace metaopt {

void LsConfig::validate(const SearchSpace& space) const {
    if (!step.empty()) {
        if (step.size() != space.dims)
            throw std::invalid_argument("LsConfig: step size count mismatch");
        for (double s : step)
            if (!(s > 0.0)) throw std::invalid_argument("LsConfig: steps must be positive");
    }
    if (max_evals < static_cast<std::int64_t>(2 * space.dims + 1))
        throw std::invalid_argument("LsConfig: budget below one neighbor sweep");
}

LsResult ls_run(const ScalarObjective& objective, const SearchSpace& space, const LsConfig& cfg,
                Rng& rng, std::optional<double> closeness) {
    space.validate();
    cfg.validate(space);
    const std::size_t n = space.dims;

    std::vector<double> step = cfg.step;
    if (step.empty()) {
        step.resize(n);
        for (std::size_t i = 0; i < n; ++i)
            step[i] = 0.001 * (space.init_hi[i] - space.init_lo[i]);
    }

    LsResult result;
    RunStats& stats = result.stats;
    stats.evals_per_iteration = static_cast<std::int64_t>(2 * n);

    std::int64_t sweep = 1;
    auto evaluate = [&](const std::vector<double>& x) {
        const double f = objective(x);
        stats.record(f, sweep, closeness);
        return f;
    };

    std::vector<double> current = sample_uniform(space, rng);
    apply_boundary(space, current);
    double current_f = evaluate(current);
    result.best_x = current;
    result.best_f = current_f;

    // Recent positions on the walk; only tie moves can revisit one, so the
    // memory breaks plateau ping-pong.
    std::deque<std::vector<double>> recent{current};
    const std::size_t memory_span = 2 * n + 1;

    while (stats.evals_used + static_cast<std::int64_t>(2 * n) <= cfg.max_evals) {
        ++sweep;
        double best_f = std::numeric_limits<double>::infinity();
        std::vector<double> best_x;
        std::vector<double> neighbor = current;
        for (std::size_t dim = 0; dim < n; ++dim) {
            for (double direction : {+1.0, -1.0}) {
                neighbor[dim] = current[dim] + direction * step[dim];
                if (space.boundary == BoundaryPolicy::ClampLowerOnly &&
                    neighbor[dim] < space.hard_lo[dim])
                    neighbor[dim] = space.hard_lo[dim];
                const double f = evaluate(neighbor);
                if (f < best_f) { // first-found wins ties: low dim, + first
                    best_f = f;
                    best_x = neighbor;
                }
            }
            neighbor[dim] = current[dim];
        }

        if (best_f > current_f) break; // strictly worse everywhere

        if (best_f == current_f) {
            bool seen = false;
            for (const auto& p : recent)
                if (p == best_x) {
                    seen = true;
                    break;
                }
            if (seen) break;
        }

        current = best_x;
        current_f = best_f;
        if (current_f < result.best_f) {
            result.best_f = current_f;
            result.best_x = current;
        }
        recent.push_back(current);
        if (recent.size() > memory_span) recent.pop_front();
    }

    stats.finish();
    return result;
}

} // namespace metaopt
