#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "metaopt/search_space.hpp"

namespace metaopt {

// The five single-objective test functions and the four scalable DTLZ
// problems.  Minimization everywhere; every single-objective optimum is 0.
enum class ObjectiveId {
    Sphere,
    Rosenbrock,
    Rastrigin,
    SchafferF6,
    Ackley,
    DTLZ1,
    DTLZ2,
    DTLZ3,
    DTLZ4,
};

bool is_multi_objective(ObjectiveId id);
std::string to_string(ObjectiveId id);
ObjectiveId objective_from_string(const std::string& name);

double eval_single(ObjectiveId id, std::span<const double> x);

// Objective vector of length m.  Requires x.size() = k + m - 1 with k >= 1
// and every component in [0, 1].  alpha is the DTLZ4 meta-variable exponent.
std::vector<double> eval_dtlz(ObjectiveId id, std::span<const double> x, std::size_t m,
                              double alpha = 100.0);

// Orthogonal distance of an objective vector to the analytic Pareto front:
// DTLZ1: |sum(f) - 0.5| / sqrt(M); DTLZ2/3/4: | ||f|| - 1 |.
double distance_to_front(ObjectiveId id, std::span<const double> f);

// Unnormalized companion of distance_to_front (DTLZ1: |sum(f) - 0.5|); both
// are reported because the convergence tables do not state a normalization.
double distance_to_front_raw(ObjectiveId id, std::span<const double> f);

// Experiment search space for the C-PSO benchmark table: dimension,
// initialization range, velocity cap and C-PSO inertia range per problem.
struct BenchProblem {
    ObjectiveId id;
    SearchSpace space;
    double cpso_w;     // upper end of the random inertia range
    double closeness;  // convergence-speed success threshold
};
BenchProblem make_bench_problem(ObjectiveId id);

using ScalarObjective = std::function<double(std::span<const double>)>;
using VectorObjective = std::function<std::vector<double>(std::span<const double>)>;

inline ScalarObjective make_scalar_objective(ObjectiveId id) {
    return [id](std::span<const double> x) { return eval_single(id, x); };
}

inline VectorObjective make_dtlz_objective(ObjectiveId id, std::size_t m, double alpha = 100.0) {
    return [id, m, alpha](std::span<const double> x) { return eval_dtlz(id, x, m, alpha); };
}

} // namespace metaopt
