#include "metaopt/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace metaopt {

std::size_t select_tournament(std::span<const double> fitness, std::size_t tournament_size,
                              Rng& rng) {
    const std::size_t n = fitness.size();
    if (n == 0) throw std::invalid_argument("select_tournament: empty population");
    if (tournament_size < 1 || tournament_size > n)
        throw std::invalid_argument("select_tournament: tournament size out of range");

    // Ties keep the earlier pick, so a fully tied population selects
    // uniformly (the first pick is uniform by construction).
    auto picks = rng.sample_without_replacement(n, tournament_size);
    std::size_t best = picks[0];
    for (std::size_t p : picks)
        if (fitness[p] < fitness[best]) best = p;
    return best;
}

std::size_t select_proportionate(std::span<const double> scores, Rng& rng) {
    if (scores.empty()) throw std::invalid_argument("select_proportionate: empty population");
    double total = 0.0;
    for (double s : scores) {
        if (!(s > 0.0)) throw std::invalid_argument("select_proportionate: scores must be positive");
        total += s;
    }
    const double u = rng.uniform01() * total;
    double acc = 0.0;
    for (std::size_t i = 0; i < scores.size(); ++i) {
        acc += scores[i];
        if (u < acc) return i;
    }
    return scores.size() - 1; // u landed on the rounding edge
}

std::vector<double> fps_scores(std::span<const double> fitness) {
    if (fitness.empty()) throw std::invalid_argument("fps_scores: empty population");
    double worst = fitness[0];
    for (double f : fitness) worst = std::max(worst, f);
    const double eps = 1e-12 * (1.0 + std::abs(worst));
    std::vector<double> scores(fitness.size());
    for (std::size_t i = 0; i < fitness.size(); ++i) scores[i] = worst - fitness[i] + eps;
    return scores;
}

std::vector<double> sigma_scale(std::span<const double> scores, double c) {
    const std::size_t n = scores.size();
    if (n == 0) throw std::invalid_argument("sigma_scale: empty population");
    double mean = 0.0;
    for (double s : scores) mean += s;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double s : scores) var += (s - mean) * (s - mean);
    const double sd = std::sqrt(var / static_cast<double>(n));

    std::vector<double> out(n);
    bool any_positive = false;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::max(scores[i] - (mean - c * sd), 0.0);
        any_positive |= out[i] > 0.0;
    }
    if (!any_positive) std::fill(out.begin(), out.end(), 1.0);
    return out;
}

std::vector<double> rank_scores(std::size_t population_size, RankScheme scheme, double s) {
    if (population_size == 0) throw std::invalid_argument("rank_scores: empty population");
    std::vector<double> scores(population_size);
    if (scheme == RankScheme::Linear) {
        if (s < 1.0 || s > 2.0) throw std::invalid_argument("rank_scores: linear s must be in [1, 2]");
        if (population_size == 1) {
            scores[0] = s;
            return scores;
        }
        for (std::size_t i = 0; i < population_size; ++i)
            scores[i] = s - 2.0 * static_cast<double>(i) * (s - 1.0) /
                                static_cast<double>(population_size - 1);
    } else {
        if (!(s > 0.0) || s >= 1.0)
            throw std::invalid_argument("rank_scores: exponential s must be in (0, 1)");
        double v = 1.0;
        for (std::size_t i = 0; i < population_size; ++i) {
            scores[i] = v;
            v *= s;
        }
    }
    return scores;
}

std::size_t select_rank(std::span<const double> fitness, RankScheme scheme, double s, Rng& rng) {
    const std::size_t n = fitness.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return fitness[a] < fitness[b]; });

    auto scores = rank_scores(n, scheme, s);
    // Linear ranking with s = 2 scores the worst individual 0; keep it
    // selectable with vanishing probability instead of violating FPS.
    for (double& sc : scores) sc = std::max(sc, 1e-12);
    const std::size_t rank_pick = select_proportionate(scores, rng);
    return order[rank_pick];
}

} // namespace metaopt
