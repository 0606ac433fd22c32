#include "metaopt/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace metaopt {

namespace {

constexpr double kPi = std::numbers::pi;

void require_dims(ObjectiveId id, std::size_t got, std::size_t want) {
    if (got != want)
        throw std::invalid_argument(to_string(id) + ": expected " + std::to_string(want) +
                                    " dimensions, got " + std::to_string(got));
}

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double xi : x) s += xi * xi;
    return s;
}

double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        const double a = x[i + 1] - x[i] * x[i];
        const double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double xi : x) s += xi * xi - 10.0 * std::cos(2.0 * kPi * xi) + 10.0;
    return s;
}

double schaffer_f6(std::span<const double> x) {
    const double h = x[0] * x[0] + x[1] * x[1];
    const double num = std::sin(std::sqrt(h));
    const double den = 1.0 + 0.001 * h;
    return 0.5 + (num * num - 0.5) / (den * den);
}

double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double xi : x) {
        sq += xi * xi;
        cs += std::cos(2.0 * kPi * xi);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

// DTLZ1/DTLZ3 rugged distance function; k = number of trailing variables.
double g_rugged(std::span<const double> xm) {
    double s = static_cast<double>(xm.size());
    for (double xi : xm) {
        const double d = xi - 0.5;
        s += d * d - std::cos(20.0 * kPi * d);
    }
    return 100.0 * s;
}

// DTLZ2/DTLZ4 spherical-bowl distance function.
double g_sphere(std::span<const double> xm) {
    double s = 0.0;
    for (double xi : xm) {
        const double d = xi - 0.5;
        s += d * d;
    }
    return s;
}

} // namespace

bool is_multi_objective(ObjectiveId id) {
    switch (id) {
    case ObjectiveId::DTLZ1:
    case ObjectiveId::DTLZ2:
    case ObjectiveId::DTLZ3:
    case ObjectiveId::DTLZ4:
        return true;
    default:
        return false;
    }
}

std::string to_string(ObjectiveId id) {
    switch (id) {
    case ObjectiveId::Sphere: return "sphere";
    case ObjectiveId::Rosenbrock: return "rosenbrock";
    case ObjectiveId::Rastrigin: return "rastrigin";
    case ObjectiveId::SchafferF6: return "schafferf6";
    case ObjectiveId::Ackley: return "ackley";
    case ObjectiveId::DTLZ1: return "dtlz1";
    case ObjectiveId::DTLZ2: return "dtlz2";
    case ObjectiveId::DTLZ3: return "dtlz3";
    case ObjectiveId::DTLZ4: return "dtlz4";
    }
    return "unknown";
}

ObjectiveId objective_from_string(const std::string& name) {
    if (name == "sphere") return ObjectiveId::Sphere;
    if (name == "rosenbrock") return ObjectiveId::Rosenbrock;
    if (name == "rastrigin") return ObjectiveId::Rastrigin;
    if (name == "schafferf6") return ObjectiveId::SchafferF6;
    if (name == "ackley") return ObjectiveId::Ackley;
    if (name == "dtlz1") return ObjectiveId::DTLZ1;
    if (name == "dtlz2") return ObjectiveId::DTLZ2;
    if (name == "dtlz3") return ObjectiveId::DTLZ3;
    if (name == "dtlz4") return ObjectiveId::DTLZ4;
    throw std::invalid_argument("unknown objective: " + name);
}

double eval_single(ObjectiveId id, std::span<const double> x) {
    switch (id) {
    case ObjectiveId::Sphere: return sphere(x);
    case ObjectiveId::Rosenbrock: return rosenbrock(x);
    case ObjectiveId::Rastrigin: return rastrigin(x);
    case ObjectiveId::SchafferF6:
        require_dims(id, x.size(), 2);
        return schaffer_f6(x);
    case ObjectiveId::Ackley: return ackley(x);
    default:
        throw std::invalid_argument(to_string(id) + " is not single-objective");
    }
}

std::vector<double> eval_dtlz(ObjectiveId id, std::span<const double> x, std::size_t m,
                              double alpha) {
    if (!is_multi_objective(id))
        throw std::invalid_argument(to_string(id) + " is not a DTLZ problem");
    if (m < 2 || x.size() < m)
        throw std::invalid_argument("eval_dtlz: need dims = k + M - 1 with k >= 1");
    for (double xi : x)
        if (xi < 0.0 || xi > 1.0)
            throw std::domain_error("eval_dtlz: decision variables must lie in [0, 1]");

    const std::size_t pos = m - 1; // position variables; the rest feed g
    const std::span<const double> xm = x.subspan(pos);

    std::vector<double> f(m);
    if (id == ObjectiveId::DTLZ1) {
        const double g = g_rugged(xm);
        const double h = 0.5 * (1.0 + g);
        for (std::size_t i = 0; i < m; ++i) {
            double v = h;
            for (std::size_t j = 0; j + i + 1 < m; ++j) v *= x[j];
            if (i > 0) v *= 1.0 - x[m - 1 - i];
            f[i] = v;
        }
        return f;
    }

    const double g = (id == ObjectiveId::DTLZ3) ? g_rugged(xm) : g_sphere(xm);
    const bool biased = (id == ObjectiveId::DTLZ4);
    auto theta = [&](std::size_t j) {
        const double xj = biased ? std::pow(x[j], alpha) : x[j];
        return xj * kPi / 2.0;
    };
    for (std::size_t i = 0; i < m; ++i) {
        double v = 1.0 + g;
        for (std::size_t j = 0; j + i + 1 < m; ++j) v *= std::cos(theta(j));
        if (i > 0) v *= std::sin(theta(m - 1 - i));
        f[i] = v;
    }
    return f;
}

double distance_to_front(ObjectiveId id, std::span<const double> f) {
    if (id == ObjectiveId::DTLZ1)
        return distance_to_front_raw(id, f) / std::sqrt(static_cast<double>(f.size()));
    return distance_to_front_raw(id, f);
}

double distance_to_front_raw(ObjectiveId id, std::span<const double> f) {
    switch (id) {
    case ObjectiveId::DTLZ1: {
        double s = 0.0;
        for (double fi : f) s += fi;
        return std::abs(s - 0.5);
    }
    case ObjectiveId::DTLZ2:
    case ObjectiveId::DTLZ3:
    case ObjectiveId::DTLZ4: {
        double s = 0.0;
        for (double fi : f) s += fi * fi;
        return std::abs(std::sqrt(s) - 1.0);
    }
    default:
        throw std::invalid_argument(to_string(id) + " has no analytic front");
    }
}

BenchProblem make_bench_problem(ObjectiveId id) {
    // Dimension, initialization range, Vmax and C-PSO inertia range of the
    // benchmark parameter table.
    auto make = [&](std::size_t dims, double half_range, double vmax, double w,
                    double closeness) {
        BenchProblem p;
        p.id = id;
        p.space = SearchSpace::symmetric(dims, half_range);
        p.space.vmax.assign(dims, vmax);
        p.cpso_w = w;
        p.closeness = closeness;
        return p;
    };
    switch (id) {
    case ObjectiveId::Sphere: return make(30, 100.0, 100.0, 1.2, 1e-4);
    case ObjectiveId::Rosenbrock: return make(30, 30.0, 30.0, 1.2, 100.0);
    case ObjectiveId::Rastrigin: return make(30, 5.12, 5.12, 1.4, 50.0);
    case ObjectiveId::SchafferF6: return make(2, 100.0, 100.0, 1.65, 1e-3);
    case ObjectiveId::Ackley: return make(30, 32.0, 32.0, 1.36, 1e-2);
    default:
        throw std::invalid_argument(to_string(id) + " is not a benchmark problem");
    }
}

} // namespace metaopt
