#include "metaopt/pareto.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace metaopt {

bool weakly_dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominance: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool dominates(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominance: length mismatch");
    bool strict = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (a[i] < b[i]) strict = true;
    }
    return strict;
}

Dominance compare(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominance: length mismatch");
    bool a_better = false, b_better = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) a_better = true;
        else if (b[i] < a[i]) b_better = true;
    }
    if (a_better && b_better) return Dominance::Indifferent;
    if (a_better) return Dominance::Dominates;
    if (b_better) return Dominance::Dominated;
    return Dominance::Equal;
}

std::vector<std::size_t> nondominated_set(std::span<const ObjectiveVector> pop) {
    if (pop.empty()) throw std::invalid_argument("nondominated_set: empty population");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < pop.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < pop.size() && !dominated; ++j)
            dominated = (j != i) && dominates(pop[j], pop[i]);
        if (!dominated) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> domination_counts(std::span<const ObjectiveVector> pop) {
    std::vector<std::size_t> counts(pop.size(), 0);
    for (std::size_t i = 0; i < pop.size(); ++i)
        for (std::size_t j = i + 1; j < pop.size(); ++j) {
            switch (compare(pop[i], pop[j])) {
            case Dominance::Dominates: ++counts[j]; break;
            case Dominance::Dominated: ++counts[i]; break;
            default: break;
            }
        }
    return counts;
}

std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::span<const ObjectiveVector> pop) {
    const std::size_t n = pop.size();
    std::vector<std::vector<std::size_t>> dominated_by(n);
    std::vector<std::size_t> count(n, 0);

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            switch (compare(pop[i], pop[j])) {
            case Dominance::Dominates:
                dominated_by[i].push_back(j);
                ++count[j];
                break;
            case Dominance::Dominated:
                dominated_by[j].push_back(i);
                ++count[i];
                break;
            default: break;
            }
        }

    std::vector<std::vector<std::size_t>> fronts;
    std::vector<std::size_t> current;
    for (std::size_t i = 0; i < n; ++i)
        if (count[i] == 0) current.push_back(i);

    while (!current.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t p : current)
            for (std::size_t q : dominated_by[p])
                if (--count[q] == 0) next.push_back(q);
        fronts.push_back(std::move(current));
        current = std::move(next);
    }
    return fronts;
}

std::vector<double> crowding_distance(std::span<const ObjectiveVector> pop,
                                      std::span<const std::size_t> front) {
    const std::size_t n = front.size();
    std::vector<double> dist(n, 0.0);
    if (n == 0) return dist;
    const std::size_t m = pop[front[0]].size();
    const double inf = std::numeric_limits<double>::infinity();
    if (n <= 2) {
        std::fill(dist.begin(), dist.end(), inf);
        return dist;
    }

    std::vector<std::size_t> order(n);
    for (std::size_t obj = 0; obj < m; ++obj) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return pop[front[a]][obj] < pop[front[b]][obj];
        });
        const double lo = pop[front[order.front()]][obj];
        const double hi = pop[front[order.back()]][obj];
        dist[order.front()] = inf;
        dist[order.back()] = inf;
        const double span = hi - lo;
        if (span <= 0.0) continue;
        for (std::size_t k = 1; k + 1 < n; ++k)
            dist[order[k]] +=
                (pop[front[order[k + 1]]][obj] - pop[front[order[k - 1]]][obj]) / span;
    }
    return dist;
}

} // namespace metaopt
