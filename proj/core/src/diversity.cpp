#include "metaopt/diversity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "metaopt/rng.hpp"

namespace metaopt {

namespace {

// Three-cell sliding-window values for interior cells, indexed by the
// occupation bits (left, cell, right).
double interior_score(bool left, bool cell, bool right) {
    static constexpr double table[8] = {
        0.0,  // 0 0 0
        0.5,  // 0 0 1
        0.75, // 0 1 0
        0.67, // 0 1 1
        0.5,  // 1 0 0
        0.75, // 1 0 1
        0.67, // 1 1 0
        1.0,  // 1 1 1
    };
    return table[(left ? 4 : 0) | (cell ? 2 : 0) | (right ? 1 : 0)];
}

// Two-cell values for the boundary cells.
double boundary_score(bool boundary_cell, bool inner_cell) {
    if (boundary_cell && inner_cell) return 1.0;
    if (boundary_cell || inner_cell) return 0.67;
    return 0.0;
}

} // namespace

double score_occupation(std::span<const std::uint8_t> occupation) {
    const std::size_t n = occupation.size();
    if (n < 3) throw std::invalid_argument("score_occupation: need at least 3 cells");
    double sum = boundary_score(occupation[0], occupation[1]);
    for (std::size_t i = 1; i + 1 < n; ++i)
        sum += interior_score(occupation[i - 1], occupation[i], occupation[i + 1]);
    sum += boundary_score(occupation[n - 1], occupation[n - 2]);
    return sum / static_cast<double>(n);
}

std::vector<std::vector<double>> pf_cell_boundaries(ObjectiveId id, std::size_t objectives,
                                                    std::size_t cells,
                                                    std::size_t sample_size) {
    if (!is_multi_objective(id))
        throw std::invalid_argument("pf_cell_boundaries: analytic front unknown for " + to_string(id));
    if (cells < 3) throw std::invalid_argument("pf_cell_boundaries: need at least 3 cells");

    // Fixed seed: the cell model is part of the metric definition, not of
    // any experiment, so it must not perturb run replays.
    Rng rng(0x9d1bafe2c0ffee01ULL);

    std::vector<std::vector<double>> samples(objectives);
    for (auto& s : samples) s.reserve(sample_size);

    std::vector<double> f(objectives);
    for (std::size_t k = 0; k < sample_size; ++k) {
        if (id == ObjectiveId::DTLZ1) {
            // Uniform over the simplex sum(f) = 0.5, f >= 0.
            double total = 0.0;
            for (std::size_t i = 0; i < objectives; ++i) {
                f[i] = -std::log(1.0 - rng.uniform01());
                total += f[i];
            }
            for (std::size_t i = 0; i < objectives; ++i) f[i] *= 0.5 / total;
        } else {
            // Uniform over the unit-sphere patch in the positive orthant.
            double norm2 = 0.0;
            for (std::size_t i = 0; i < objectives; ++i) {
                f[i] = std::abs(rng.gauss());
                norm2 += f[i] * f[i];
            }
            const double inv = 1.0 / std::sqrt(norm2);
            for (std::size_t i = 0; i < objectives; ++i) f[i] *= inv;
        }
        for (std::size_t i = 0; i < objectives; ++i) samples[i].push_back(f[i]);
    }

    std::vector<std::vector<double>> boundaries(objectives);
    for (std::size_t axis = 0; axis < objectives; ++axis) {
        auto& s = samples[axis];
        std::sort(s.begin(), s.end());
        auto& b = boundaries[axis];
        b.resize(cells + 1);
        b.front() = 0.0;
        b.back() = (id == ObjectiveId::DTLZ1) ? 0.5 : 1.0;
        for (std::size_t j = 1; j < cells; ++j)
            b[j] = s[j * s.size() / cells];
    }
    return boundaries;
}

std::vector<std::uint8_t> occupy_cells(std::span<const double> boundaries,
                                       std::span<const ObjectiveVector> solutions,
                                       std::size_t axis) {
    const std::size_t cells = boundaries.size() - 1;
    std::vector<std::uint8_t> occupation(cells, 0);
    for (const auto& f : solutions) {
        const double v = f[axis];
        if (v < boundaries.front() || v > boundaries.back()) continue;
        auto it = std::upper_bound(boundaries.begin(), boundaries.end(), v);
        std::size_t cell = static_cast<std::size_t>(it - boundaries.begin());
        cell = (cell == 0) ? 0 : cell - 1;
        if (cell >= cells) cell = cells - 1;
        occupation[cell] = 1;
    }
    return occupation;
}

double diversity_metric2(std::span<const ObjectiveVector> obtained,
                         const std::vector<std::vector<double>>& axis_boundaries) {
    if (axis_boundaries.empty()) throw std::invalid_argument("diversity_metric2: no axes");
    double total = 0.0;
    for (std::size_t axis = 0; axis < axis_boundaries.size(); ++axis) {
        const auto occ = occupy_cells(axis_boundaries[axis], obtained, axis);
        total += score_occupation(occ);
    }
    return total / static_cast<double>(axis_boundaries.size());
}

double diversity_metric2(ObjectiveId id, std::span<const ObjectiveVector> obtained,
                         std::size_t objectives, std::size_t cells) {
    return diversity_metric2(obtained, pf_cell_boundaries(id, objectives, cells));
}

} // namespace metaopt
