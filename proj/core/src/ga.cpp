#include "metaopt/ga.hpp"

#include <algorithm>
#include <stdexcept>

#include "metaopt/variation.hpp"

namespace metaopt {

void GaConfig::validate() const {
    if (pop_size < 2) throw std::invalid_argument("GaConfig: population must hold at least 2");
    if (p_c < 0.0 || p_c > 1.0) throw std::invalid_argument("GaConfig: p_c out of [0, 1]");
    if (p_m < 0.0 || p_m > 1.0) throw std::invalid_argument("GaConfig: p_m out of [0, 1]");
    if (!(eta_c > 0.0) || !(eta_m > 0.0))
        throw std::invalid_argument("GaConfig: distribution indices must be positive");
    if (tournament_size < 2 || tournament_size > pop_size)
        throw std::invalid_argument("GaConfig: tournament size out of range");
    if (selection == SelectionKind::LinearRank && (rank_s < 1.0 || rank_s > 2.0))
        throw std::invalid_argument("GaConfig: linear rank s out of [1, 2]");
    if (selection == SelectionKind::ExponentialRank && (rank_s <= 0.0 || rank_s >= 1.0))
        throw std::invalid_argument("GaConfig: exponential rank s out of (0, 1)");
}

namespace {

std::size_t best_index(const std::vector<RealIndividual>& pop) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < pop.size(); ++i)
        if (pop[i].fitness < pop[best].fitness) best = i;
    return best;
}

std::size_t select_parent(const GaConfig& cfg, const std::vector<double>& fitness, Rng& rng) {
    switch (cfg.selection) {
    case SelectionKind::Tournament:
        return select_tournament(fitness, cfg.tournament_size, rng);
    case SelectionKind::Fps: {
        auto scores = fps_scores(fitness);
        if (cfg.fps_sigma_scaling) {
            scores = sigma_scale(scores, cfg.sigma_c);
            // Truncated individuals stay selectable with vanishing odds.
            double top = 0.0;
            for (double s : scores) top = std::max(top, s);
            for (double& s : scores) s = std::max(s, 1e-12 * top);
        }
        return select_proportionate(scores, rng);
    }
    case SelectionKind::LinearRank:
        return select_rank(fitness, RankScheme::Linear, cfg.rank_s, rng);
    case SelectionKind::ExponentialRank:
        return select_rank(fitness, RankScheme::Exponential, cfg.rank_s, rng);
    }
    throw std::logic_error("ga: unknown selection kind");
}

} // namespace

GaResult ga_run(const ScalarObjective& objective, const SearchSpace& space,
                const GaConfig& config, std::int64_t budget, Rng& rng,
                std::optional<double> closeness,
                const std::vector<double>* initial_injection, const GaObserver& observer) {
    config.validate();
    space.validate();
    const std::size_t n = config.pop_size;
    if (budget < static_cast<std::int64_t>(n))
        throw std::invalid_argument("ga_run: budget below population size");

    GaResult result;
    RunStats& stats = result.stats;
    stats.evals_per_iteration = static_cast<std::int64_t>(n);
    result.best.fitness = std::numeric_limits<double>::infinity();

    std::int64_t generation = 1;
    auto budget_left = [&] { return stats.evals_used < budget; };
    auto evaluate = [&](RealIndividual& ind) {
        ind.fitness = objective(ind.genome);
        stats.record(ind.fitness, generation, closeness);
        if (ind.fitness < result.best.fitness) result.best = ind;
    };

    std::vector<RealIndividual> pop(n);
    for (std::size_t i = 0; i < n; ++i) {
        pop[i].genome = sample_uniform(space, rng);
        if (i == 0 && initial_injection) pop[i].genome = *initial_injection;
        apply_boundary(space, pop[i].genome);
        evaluate(pop[i]);
    }
    if (observer) observer(generation, pop[best_index(pop)].fitness);

    std::vector<double> fitness(n);
    while (stats.evals_used + static_cast<std::int64_t>(n) <= budget) {
        ++generation;
        for (std::size_t i = 0; i < n; ++i) fitness[i] = pop[i].fitness;

        // Mating selection and recombination: consecutive parents pair up and
        // each pair contributes two offspring, so the offspring count is n.
        std::vector<std::size_t> parents(n);
        for (std::size_t i = 0; i < n; ++i) parents[i] = select_parent(config, fitness, rng);

        std::vector<RealIndividual> offspring;
        offspring.reserve(n);
        for (std::size_t i = 0; i + 1 < n; i += 2) {
            const auto& p1 = pop[parents[i]].genome;
            const auto& p2 = pop[parents[i + 1]].genome;
            if (rng.bernoulli(config.p_c)) {
                auto [o1, o2] = sbx_crossover(p1, p2, config.eta_c, rng);
                offspring.push_back({std::move(o1), 0.0});
                offspring.push_back({std::move(o2), 0.0});
            } else {
                offspring.push_back({p1, 0.0});
                offspring.push_back({p2, 0.0});
            }
        }
        if (offspring.size() < n) offspring.push_back({pop[parents[n - 1]].genome, 0.0});

        // Mutation acts on the parent population with the incumbent best
        // immune; changed parents need their fitness refreshed.
        const std::size_t elite = best_index(pop);
        for (std::size_t i = 0; i < n && budget_left(); ++i) {
            if (i == elite) continue;
            if (polynomial_mutation_inplace(pop[i].genome, space.init_lo, space.init_hi,
                                            config.p_m, config.eta_m, rng)) {
                apply_boundary(space, pop[i].genome);
                evaluate(pop[i]);
            }
        }

        for (auto& child : offspring) {
            if (!budget_left()) break;
            apply_boundary(space, child.genome);
            evaluate(child);
        }
        if (!budget_left()) break;

        // Survival: pool best survives unconditionally, the remaining slots
        // are filled by tournaments over parents + offspring.
        std::vector<RealIndividual> pool = std::move(pop);
        pool.insert(pool.end(), std::make_move_iterator(offspring.begin()),
                    std::make_move_iterator(offspring.end()));
        std::vector<double> pool_fitness(pool.size());
        for (std::size_t i = 0; i < pool.size(); ++i) pool_fitness[i] = pool[i].fitness;

        std::vector<RealIndividual> next;
        next.reserve(n);
        next.push_back(pool[best_index(pool)]);
        for (std::size_t i = 1; i < n; ++i)
            next.push_back(pool[select_tournament(pool_fitness, config.tournament_size, rng)]);
        pop = std::move(next);
        if (observer) observer(generation, pop[best_index(pop)].fitness);
    }

    stats.finish();
    return result;
}

} // namespace metaopt
