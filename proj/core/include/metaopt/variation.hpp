#pragma once

#include <span>
#include <utility>
#include <vector>

#include "metaopt/rng.hpp"

namespace metaopt {

// Simulated binary crossover.  Per component, a spread factor beta is drawn
// from u ~ U(0,1) through
//   beta = (2u)^(1/(eta+1))            if u <= 0.5
//   beta = (1/(2(1-u)))^(1/(eta+1))    otherwise
// and the offspring are
//   o1 = 0.5[(1+beta) p1 + (1-beta) p2]
//   o2 = 0.5[(1-beta) p1 + (1+beta) p2]
// The pair mean is preserved exactly: (o1+o2)/2 = (p1+p2)/2.
double sbx_beta(double u, double eta);
std::pair<std::vector<double>, std::vector<double>> sbx_crossover(
    std::span<const double> p1, std::span<const double> p2, double eta_c, Rng& rng);

// Polynomial mutation.  Each component independently mutates with
// probability p_m by x' = x + (xu - xl) * delta, where
//   delta = (2r)^(1/(eta_m+1)) - 1         if r < 0.5
//   delta = 1 - (2(1-r))^(1/(eta_m+1))     otherwise
// so r = 0.5 leaves the component unchanged.
double polynomial_delta(double r, double eta_m);
std::vector<double> polynomial_mutation(std::span<const double> x,
                                        std::span<const double> lower,
                                        std::span<const double> upper, double p_m, double eta_m,
                                        Rng& rng);

// In-place variant; returns true when at least one component changed.
bool polynomial_mutation_inplace(std::span<double> x, std::span<const double> lower,
                                 std::span<const double> upper, double p_m, double eta_m,
                                 Rng& rng);

// Reference-implementation SBX for box-bounded problems: each variable
// crosses with probability 0.5, the spread distribution is contracted so
// offspring stay inside [lower, upper], and offspring sides swap with
// probability 0.5.  This is the operator commonly shipped inside elitist
// multi-objective GAs; the plain variant above is kept separate because the
// single-objective and polyploid paths are defined in terms of it.
std::pair<std::vector<double>, std::vector<double>> sbx_crossover_bounded(
    std::span<const double> p1, std::span<const double> p2, double eta_c,
    std::span<const double> lower, std::span<const double> upper, Rng& rng);

// Bounded polynomial mutation companion: the perturbation distribution is
// contracted toward the nearer bound so mutants never leave the box.
void polynomial_mutation_bounded(std::span<double> x, std::span<const double> lower,
                                 std::span<const double> upper, double p_m, double eta_m,
                                 Rng& rng);

} // namespace metaopt
