#include "metaopt/run_stats.hpp"

#include <algorithm>
#include <stdexcept>

namespace metaopt {

namespace {

double median_of_sorted(const std::vector<double>& v) {
    const std::size_t n = v.size();
    if (n % 2 == 1) return v[n / 2];
    return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

RunSummary summarize_runs(const std::vector<RunStats>& runs) {
    if (runs.empty()) throw std::invalid_argument("summarize_runs: no runs");

    RunSummary out;
    out.runs = runs.size();

    std::vector<double> iters;
    std::vector<double> finals;
    finals.reserve(runs.size());
    for (const RunStats& r : runs) {
        finals.push_back(r.final_best);
        if (r.succeeded && r.iterations_to_closeness)
            iters.push_back(static_cast<double>(*r.iterations_to_closeness));
    }
    out.successes = iters.size();
    out.success_rate = 100.0 * static_cast<double>(iters.size()) / static_cast<double>(runs.size());

    std::sort(finals.begin(), finals.end());
    out.min_final = finals.front();
    out.max_final = finals.back();
    out.median_final = median_of_sorted(finals);
    double sum = 0.0;
    for (double f : finals) sum += f;
    out.mean_final = sum / static_cast<double>(finals.size());

    if (!iters.empty()) {
        std::sort(iters.begin(), iters.end());
        out.min_iterations = iters.front();
        out.max_iterations = iters.back();
        out.median_iterations = median_of_sorted(iters);
        double isum = 0.0;
        for (double i : iters) isum += i;
        out.avg_iterations = isum / static_cast<double>(iters.size());
    }
    return out;
}

} // namespace metaopt
