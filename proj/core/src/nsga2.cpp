#include "metaopt/nsga2.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "metaopt/variation.hpp"

namespace metaopt {

void Nsga2Config::validate() const {
    if (pop_size < 4) throw std::invalid_argument("Nsga2Config: population too small");
    if (p_c < 0.0 || p_c > 1.0) throw std::invalid_argument("Nsga2Config: p_c out of [0, 1]");
    if (!(eta_c > 0.0) || !(eta_m > 0.0))
        throw std::invalid_argument("Nsga2Config: distribution indices must be positive");
}

namespace {

struct RankedPopulation {
    std::vector<std::size_t> rank;
    std::vector<double> crowding;
};

RankedPopulation rank_population(const std::vector<ObjectiveVector>& objectives) {
    RankedPopulation rp;
    rp.rank.assign(objectives.size(), 0);
    rp.crowding.assign(objectives.size(), 0.0);
    auto fronts = fast_nondominated_sort(objectives);
    for (std::size_t r = 0; r < fronts.size(); ++r) {
        auto dist = crowding_distance(objectives, fronts[r]);
        for (std::size_t k = 0; k < fronts[r].size(); ++k) {
            rp.rank[fronts[r][k]] = r;
            rp.crowding[fronts[r][k]] = dist[k];
        }
    }
    return rp;
}

std::size_t crowded_tournament(const RankedPopulation& rp, Rng& rng) {
    const std::size_t n = rp.rank.size();
    const std::size_t a = rng.below(n);
    const std::size_t b = rng.below(n);
    if (rp.rank[a] != rp.rank[b]) return rp.rank[a] < rp.rank[b] ? a : b;
    if (rp.crowding[a] != rp.crowding[b]) return rp.crowding[a] > rp.crowding[b] ? a : b;
    return a;
}

} // namespace

std::vector<Nsga2Individual> nsga2_run(const VectorObjective& objective, std::size_t dims,
                                       const Nsga2Config& cfg, std::int64_t budget, Rng& rng,
                                       const MoeaObserver& observer) {
    cfg.validate();
    if (budget < static_cast<std::int64_t>(cfg.pop_size))
        throw std::invalid_argument("nsga2_run: budget below population size");
    const double p_m = cfg.p_m > 0.0 ? cfg.p_m : 1.0 / static_cast<double>(dims);
    const std::vector<double> lower(dims, 0.0), upper(dims, 1.0);
    const std::size_t n = cfg.pop_size;

    std::vector<Nsga2Individual> pop(n);
    for (auto& ind : pop) {
        ind.genome.resize(dims);
        for (double& x : ind.genome) x = rng.uniform01();
        ind.objectives = objective(ind.genome);
    }
    std::int64_t evals = static_cast<std::int64_t>(n);

    auto notify = [&] {
        if (!observer) return;
        std::vector<ObjectiveVector> objs(pop.size());
        for (std::size_t i = 0; i < pop.size(); ++i) objs[i] = pop[i].objectives;
        observer(evals, objs);
    };
    notify();

    while (evals + static_cast<std::int64_t>(n) <= budget) {
        std::vector<ObjectiveVector> objs(n);
        for (std::size_t i = 0; i < n; ++i) objs[i] = pop[i].objectives;
        const RankedPopulation rp = rank_population(objs);

        std::vector<Nsga2Individual> offspring;
        offspring.reserve(n);
        while (offspring.size() < n) {
            const auto& p1 = pop[crowded_tournament(rp, rng)].genome;
            const auto& p2 = pop[crowded_tournament(rp, rng)].genome;
            std::vector<double> c1, c2;
            if (cfg.p_c >= 1.0 || rng.bernoulli(cfg.p_c)) {
                std::tie(c1, c2) = sbx_crossover_bounded(p1, p2, cfg.eta_c, lower, upper, rng);
            } else {
                c1 = p1;
                c2 = p2;
            }
            for (auto* child : {&c1, &c2}) {
                polynomial_mutation_bounded(*child, lower, upper, p_m, cfg.eta_m, rng);
                if (offspring.size() < n) offspring.push_back({std::move(*child), {}});
            }
        }
        for (auto& child : offspring) child.objectives = objective(child.genome);
        evals += static_cast<std::int64_t>(offspring.size());

        // Elitist survival: fill by front, truncate the split front by
        // descending crowding distance.
        std::vector<Nsga2Individual> combined = std::move(pop);
        combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                        std::make_move_iterator(offspring.end()));
        std::vector<ObjectiveVector> combined_objs(combined.size());
        for (std::size_t i = 0; i < combined.size(); ++i) combined_objs[i] = combined[i].objectives;
        auto fronts = fast_nondominated_sort(combined_objs);

        std::vector<Nsga2Individual> next;
        next.reserve(n);
        for (const auto& front : fronts) {
            if (next.size() == n) break;
            if (next.size() + front.size() <= n) {
                for (std::size_t idx : front) next.push_back(std::move(combined[idx]));
                continue;
            }
            auto dist = crowding_distance(combined_objs, front);
            std::vector<std::size_t> order(front.size());
            std::iota(order.begin(), order.end(), std::size_t{0});
            std::stable_sort(order.begin(), order.end(),
                             [&](std::size_t a, std::size_t b) { return dist[a] > dist[b]; });
            for (std::size_t k : order) {
                if (next.size() == n) break;
                next.push_back(std::move(combined[front[k]]));
            }
        }
        pop = std::move(next);
        notify();
    }
    return pop;
}

} // namespace metaopt
