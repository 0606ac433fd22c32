#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace metaopt {

// Progress record of one optimizer run.  best_per_eval keeps only the steps
// where the incumbent improved (plus the final point), so the best-so-far
// value at any evaluation count can be reconstructed exactly.
struct RunStats {
    struct Step {
        std::int64_t eval;
        double best;
    };

    std::vector<Step> best_per_eval;
    double final_best = std::numeric_limits<double>::infinity();
    std::optional<std::int64_t> iterations_to_closeness;
    bool succeeded = false;
    std::int64_t evals_used = 0;
    std::int64_t evals_per_iteration = 1;

    // Records the outcome of one objective evaluation.  `iteration` is the
    // sweep/generation the evaluation belongs to (1-based).
    void record(double value, std::int64_t iteration, std::optional<double> closeness) {
        ++evals_used;
        if (value < final_best) {
            final_best = value;
            best_per_eval.push_back({evals_used, value});
            if (closeness && !succeeded && value <= *closeness) {
                succeeded = true;
                iterations_to_closeness = iteration;
            }
        }
    }

    void finish() {
        if (best_per_eval.empty() || best_per_eval.back().eval != evals_used)
            best_per_eval.push_back({evals_used, final_best});
    }

    // Best-so-far after `evals` evaluations.
    double best_at(std::int64_t evals) const {
        double best = std::numeric_limits<double>::infinity();
        for (const Step& s : best_per_eval) {
            if (s.eval > evals) break;
            best = s.best;
        }
        return best;
    }
};

// Aggregate of a batch of runs in the shape of the convergence-speed tables:
// iteration statistics over successful runs only, success rate over all runs.
struct RunSummary {
    double avg_iterations = 0.0;
    double median_iterations = 0.0;
    double max_iterations = 0.0;
    double min_iterations = 0.0;
    double success_rate = 0.0; // percent
    std::size_t successes = 0;
    std::size_t runs = 0;

    double mean_final = 0.0;
    double median_final = 0.0;
    double min_final = 0.0;
    double max_final = 0.0;
};

RunSummary summarize_runs(const std::vector<RunStats>& runs);

} // namespace metaopt
