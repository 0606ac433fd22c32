#include "metaopt/variation.hpp"

#include <cmath>
#include <stdexcept>

namespace metaopt {

double sbx_beta(double u, double eta) {
    if (u <= 0.5) return std::pow(2.0 * u, 1.0 / (eta + 1.0));
    return std::pow(1.0 / (2.0 * (1.0 - u)), 1.0 / (eta + 1.0));
}

std::pair<std::vector<double>, std::vector<double>> sbx_crossover(
    std::span<const double> p1, std::span<const double> p2, double eta_c, Rng& rng) {
    if (p1.size() != p2.size())
        throw std::invalid_argument("sbx_crossover: parent length mismatch");
    std::vector<double> o1(p1.size()), o2(p1.size());
    for (std::size_t i = 0; i < p1.size(); ++i) {
        const double beta = sbx_beta(rng.uniform01(), eta_c);
        o1[i] = 0.5 * ((1.0 + beta) * p1[i] + (1.0 - beta) * p2[i]);
        o2[i] = 0.5 * ((1.0 - beta) * p1[i] + (1.0 + beta) * p2[i]);
    }
    return {std::move(o1), std::move(o2)};
}

double polynomial_delta(double r, double eta_m) {
    if (r < 0.5) return std::pow(2.0 * r, 1.0 / (eta_m + 1.0)) - 1.0;
    return 1.0 - std::pow(2.0 * (1.0 - r), 1.0 / (eta_m + 1.0));
}

bool polynomial_mutation_inplace(std::span<double> x, std::span<const double> lower,
                                 std::span<const double> upper, double p_m, double eta_m,
                                 Rng& rng) {
    if (lower.size() != x.size() || upper.size() != x.size())
        throw std::invalid_argument("polynomial_mutation: bounds length mismatch");
    bool changed = false;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!rng.bernoulli(p_m)) continue;
        const double delta = polynomial_delta(rng.uniform01(), eta_m);
        if (delta != 0.0) {
            x[i] += (upper[i] - lower[i]) * delta;
            changed = true;
        }
    }
    return changed;
}

std::vector<double> polynomial_mutation(std::span<const double> x,
                                        std::span<const double> lower,
                                        std::span<const double> upper, double p_m, double eta_m,
                                        Rng& rng) {
    std::vector<double> out(x.begin(), x.end());
    polynomial_mutation_inplace(out, lower, upper, p_m, eta_m, rng);
    return out;
}

std::pair<std::vector<double>, std::vector<double>> sbx_crossover_bounded(
    std::span<const double> p1, std::span<const double> p2, double eta_c,
    std::span<const double> lower, std::span<const double> upper, Rng& rng) {
    if (p1.size() != p2.size())
        throw std::invalid_argument("sbx_crossover_bounded: parent length mismatch");
    constexpr double kEps = 1e-14;
    std::vector<double> c1(p1.begin(), p1.end()), c2(p2.begin(), p2.end());
    for (std::size_t i = 0; i < p1.size(); ++i) {
        if (rng.uniform01() > 0.5) continue;
        double y1 = p1[i], y2 = p2[i];
        if (std::abs(y1 - y2) < kEps) continue;
        if (y1 > y2) std::swap(y1, y2);
        const double yl = lower[i], yu = upper[i];
        const double u = rng.uniform01();
        const auto spread = [&](double beta) {
            const double alpha = 2.0 - std::pow(beta, -(eta_c + 1.0));
            if (u <= 1.0 / alpha) return std::pow(u * alpha, 1.0 / (eta_c + 1.0));
            return std::pow(1.0 / (2.0 - u * alpha), 1.0 / (eta_c + 1.0));
        };
        double betaq = spread(1.0 + 2.0 * (y1 - yl) / (y2 - y1));
        double lo_child = 0.5 * ((y1 + y2) - betaq * (y2 - y1));
        betaq = spread(1.0 + 2.0 * (yu - y2) / (y2 - y1));
        double hi_child = 0.5 * ((y1 + y2) + betaq * (y2 - y1));
        lo_child = std::clamp(lo_child, yl, yu);
        hi_child = std::clamp(hi_child, yl, yu);
        if (rng.uniform01() <= 0.5) std::swap(lo_child, hi_child);
        c1[i] = lo_child;
        c2[i] = hi_child;
    }
    return {std::move(c1), std::move(c2)};
}

void polynomial_mutation_bounded(std::span<double> x, std::span<const double> lower,
                                 std::span<const double> upper, double p_m, double eta_m,
                                 Rng& rng) {
    if (lower.size() != x.size() || upper.size() != x.size())
        throw std::invalid_argument("polynomial_mutation_bounded: bounds length mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (rng.uniform01() > p_m) continue;
        const double yl = lower[i], yu = upper[i];
        const double y = x[i];
        const double d_lo = (y - yl) / (yu - yl);
        const double d_hi = (yu - y) / (yu - yl);
        const double u = rng.uniform01();
        const double pow_inv = 1.0 / (eta_m + 1.0);
        double deltaq;
        if (u <= 0.5) {
            const double xy = 1.0 - d_lo;
            deltaq = std::pow(2.0 * u + (1.0 - 2.0 * u) * std::pow(xy, eta_m + 1.0), pow_inv) - 1.0;
        } else {
            const double xy = 1.0 - d_hi;
            deltaq =
                1.0 - std::pow(2.0 * (1.0 - u) + 2.0 * (u - 0.5) * std::pow(xy, eta_m + 1.0), pow_inv);
        }
        x[i] = std::clamp(y + deltaq * (yu - yl), yl, yu);
    }
}

} // namespace metaopt
