#include "metaopt/polyploid.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "metaopt/variation.hpp"

namespace metaopt {

void PolyploidConfig::validate() const {
    if (pop_size < 2) throw std::invalid_argument("PolyploidConfig: population too small");
    if (ploidy < 1) throw std::invalid_argument("PolyploidConfig: ploidy must be at least 1");
    if (p_c < 0.0 || p_c > 1.0) throw std::invalid_argument("PolyploidConfig: p_c out of [0, 1]");
    if (!(eta_c > 0.0) || !(eta_m > 0.0))
        throw std::invalid_argument("PolyploidConfig: distribution indices must be positive");
}

namespace {

void clamp_to_box(std::vector<double>& x, std::span<const double> lower,
                  std::span<const double> upper) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lower[i], upper[i]);
}

// Uniform per-locus pick over the d chromosomes of one parent.  A monoploid
// parent is its own representative and consumes no draws.
std::vector<double> representative(const PolyploidVector& p, Rng& rng) {
    if (p.redundant.empty()) return p.das;
    const std::size_t d = p.ploidy();
    std::vector<double> rep(p.das.size());
    for (std::size_t locus = 0; locus < rep.size(); ++locus) {
        const std::size_t pick = rng.below(d);
        rep[locus] = (pick == 0) ? p.das[locus] : p.redundant[pick - 1][locus];
    }
    return rep;
}

const std::vector<double>& chromosome_at(const PolyploidVector& p, std::size_t index) {
    return index == 0 ? p.das : p.redundant[index - 1];
}

} // namespace

PolyploidVector polyploid_mate(const PolyploidVector& p1, const PolyploidVector& p2,
                               const PolyploidConfig& cfg, double p_m,
                               std::span<const double> lower, std::span<const double> upper,
                               Rng& rng) {
    if (p1.das.size() != p2.das.size() || p1.ploidy() != p2.ploidy())
        throw std::invalid_argument("polyploid_mate: parent shape mismatch");

    const std::vector<double> rep1 = representative(p1, rng);
    const std::vector<double> rep2 = representative(p2, rng);

    PolyploidVector child;
    if (cfg.p_c >= 1.0 || rng.bernoulli(cfg.p_c)) {
        child.das = sbx_crossover(rep1, rep2, cfg.eta_c, rng).first;
    } else {
        child.das = rep1;
    }
    polynomial_mutation_inplace(child.das, lower, upper, p_m, cfg.eta_m, rng);
    clamp_to_box(child.das, lower, upper);

    const std::size_t d = p1.ploidy();
    child.redundant.reserve(d - 1);
    for (std::size_t r = 1; r < d; ++r) {
        const std::size_t pick = rng.below(2 * d);
        child.redundant.push_back(pick < d ? chromosome_at(p1, pick)
                                           : chromosome_at(p2, pick - d));
    }
    return child;
}

std::size_t polyploid_generation(std::vector<PolyploidVector>& pop, const PolyploidConfig& cfg,
                                 const VectorObjective& objective, double p_m,
                                 std::span<const double> lower, std::span<const double> upper,
                                 Rng& rng) {
    if (pop.size() < 2) throw std::invalid_argument("polyploid_generation: population too small");

    std::vector<ObjectiveVector> objectives(pop.size());
    for (std::size_t i = 0; i < pop.size(); ++i) objectives[i] = pop[i].objectives;

    auto counts = domination_counts(objectives);
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < counts.size(); ++i)
        if (counts[i] == 0) pool.push_back(i);

    // Pairing: shuffle and pair consecutive members; an odd leftover mates a
    // random other pool member; a single-member pool mates with itself.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (pool.size() < 2) {
        pairs.emplace_back(pool[0], pool[0]);
    } else {
        rng.shuffle(pool);
        for (std::size_t i = 0; i + 1 < pool.size(); i += 2) pairs.emplace_back(pool[i], pool[i + 1]);
        if (pool.size() % 2 == 1) {
            const std::size_t leftover = pool.back();
            std::size_t partner = pool[rng.below(pool.size() - 1)];
            pairs.emplace_back(leftover, partner);
        }
    }

    std::vector<PolyploidVector> offspring;
    offspring.reserve(pairs.size());
    for (auto [a, b] : pairs) {
        PolyploidVector child = polyploid_mate(pop[a], pop[b], cfg, p_m, lower, upper, rng);
        child.objectives = objective(child.das);
        offspring.push_back(std::move(child));
    }
    const std::size_t evals = offspring.size();

    // Survival: ascending domination count over parents + offspring, ties
    // resolved uniformly at random, top N survive.
    std::vector<PolyploidVector> combined = std::move(pop);
    combined.insert(combined.end(), std::make_move_iterator(offspring.begin()),
                    std::make_move_iterator(offspring.end()));
    std::vector<ObjectiveVector> combined_obj(combined.size());
    for (std::size_t i = 0; i < combined.size(); ++i) combined_obj[i] = combined[i].objectives;
    auto combined_counts = domination_counts(combined_obj);

    std::vector<double> tiebreak(combined.size());
    for (double& t : tiebreak) t = rng.uniform01();
    std::vector<std::size_t> order(combined.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (combined_counts[a] != combined_counts[b])
            return combined_counts[a] < combined_counts[b];
        return tiebreak[a] < tiebreak[b];
    });

    std::vector<PolyploidVector> next;
    next.reserve(cfg.pop_size);
    for (std::size_t i = 0; i < cfg.pop_size; ++i) next.push_back(std::move(combined[order[i]]));
    pop = std::move(next);
    return evals;
}

ExtractionStats extract_population(const std::vector<PolyploidVector>& pop,
                                   const VectorObjective& objective,
                                   const std::function<double(std::span<const double>)>& distance) {
    if (pop.empty()) throw std::invalid_argument("extract_population: empty population");

    ExtractionStats stats;
    std::vector<ObjectiveVector> extracted;
    extracted.reserve(pop.size() * pop.front().ploidy());

    double original_sum = 0.0;
    for (const auto& v : pop) {
        original_sum += distance(v.objectives);
        extracted.push_back(v.objectives);
        for (const auto& chrom : v.redundant) extracted.push_back(objective(chrom));
    }
    stats.avg_distance_original = original_sum / static_cast<double>(pop.size());

    double extracted_sum = 0.0;
    for (const auto& f : extracted) extracted_sum += distance(f);
    stats.avg_distance_extracted = extracted_sum / static_cast<double>(extracted.size());

    auto counts = domination_counts(extracted);
    std::size_t dominated = 0;
    for (std::size_t c : counts)
        if (c > 0) ++dominated;
    stats.pct_dominated = 100.0 * static_cast<double>(dominated) / static_cast<double>(extracted.size());
    return stats;
}

std::vector<PolyploidVector> polyploid_run(const VectorObjective& objective, std::size_t dims,
                                           const PolyploidConfig& cfg, std::int64_t budget,
                                           Rng& rng, const MoeaObserver& observer) {
    cfg.validate();
    if (budget < static_cast<std::int64_t>(cfg.pop_size))
        throw std::invalid_argument("polyploid_run: budget below population size");
    const double p_m = cfg.p_m > 0.0 ? cfg.p_m : 1.0 / static_cast<double>(dims);
    const std::vector<double> lower(dims, 0.0), upper(dims, 1.0);

    std::vector<PolyploidVector> pop(cfg.pop_size);
    for (auto& v : pop) {
        v.das.resize(dims);
        for (double& x : v.das) x = rng.uniform01();
        v.redundant.resize(cfg.ploidy - 1);
        for (auto& chrom : v.redundant) {
            chrom.resize(dims);
            for (double& x : chrom) x = rng.uniform01();
        }
        v.objectives = objective(v.das);
    }
    std::int64_t evals = static_cast<std::int64_t>(cfg.pop_size);

    auto notify = [&] {
        if (!observer) return;
        std::vector<ObjectiveVector> objs(pop.size());
        for (std::size_t i = 0; i < pop.size(); ++i) objs[i] = pop[i].objectives;
        observer(evals, objs);
    };
    notify();

    // A generation costs one evaluation per mated pair, so the run stops at
    // the first generation boundary at or beyond the budget.
    while (evals < budget) {
        evals += static_cast<std::int64_t>(
            polyploid_generation(pop, cfg, objective, p_m, lower, upper, rng));
        notify();
    }
    return pop;
}

} // namespace metaopt
