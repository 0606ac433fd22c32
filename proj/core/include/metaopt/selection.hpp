#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "metaopt/rng.hpp"

namespace metaopt {

// Mating-selection mechanisms over a population of fitness values
// (minimization).  All of them return an index into the population.

// Picks `tournament_size` distinct individuals uniformly and returns the
// fittest (lowest fitness; ties go to the lowest index).  The whole
// population competes when tournament_size equals the population size.
std::size_t select_tournament(std::span<const double> fitness, std::size_t tournament_size,
                              Rng& rng);

// Fitness-proportionate selection over positive scores: the pick probability
// of individual j is score[j] / sum(score).
std::size_t select_proportionate(std::span<const double> scores, Rng& rng);

// Maximization-style scores for FPS over minimization fitness:
// score = worst - f + epsilon, so the best individual gets the largest score.
std::vector<double> fps_scores(std::span<const double> fitness);

// Sigma-scaling preprocessor for FPS scores: score' = max(score - (mean - c*std), 0).
// Degenerates to uniform scores when everything truncates to zero.
std::vector<double> sigma_scale(std::span<const double> scores, double c = 2.0);

enum class RankScheme { Linear, Exponential };

// Rank-based scores for a population sorted implicitly by fitness.
//   Linear:      f(i) = s - 2(i-1)(s-1)/(N-1), best rank i=1 scores s, worst 2-s.
//   Exponential: best scores 1, then s, s^2, ... (s typically near 0.99).
std::vector<double> rank_scores(std::size_t population_size, RankScheme scheme, double s);

// Ranks the population by fitness, applies the scheme scores and draws
// proportionally; returns a population index.
std::size_t select_rank(std::span<const double> fitness, RankScheme scheme, double s, Rng& rng);

} // namespace metaopt
