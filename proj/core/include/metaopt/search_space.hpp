#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "metaopt/rng.hpp"

namespace metaopt {

enum class BoundaryPolicy {
    Unbounded,      // positions may take any value
    ClampLowerOnly, // positions may not fall below hard_lo, no upper limit
};

// Box description shared by every optimizer: per-dimension initialization
// ranges, an optional lower clamp, and optional per-dimension speed caps.
struct SearchSpace {
    std::size_t dims = 0;
    std::vector<double> init_lo;
    std::vector<double> init_hi;
    std::vector<double> hard_lo;  // used when boundary == ClampLowerOnly
    std::vector<double> vmax;     // empty means no velocity cap
    BoundaryPolicy boundary = BoundaryPolicy::Unbounded;

    static SearchSpace symmetric(std::size_t dims, double half_range) {
        SearchSpace s;
        s.dims = dims;
        s.init_lo.assign(dims, -half_range);
        s.init_hi.assign(dims, half_range);
        return s;
    }

    void validate() const {
        if (dims == 0) throw std::invalid_argument("SearchSpace: dims must be positive");
        if (init_lo.size() != dims || init_hi.size() != dims)
            throw std::invalid_argument("SearchSpace: init range size mismatch");
        for (std::size_t i = 0; i < dims; ++i)
            if (!(init_lo[i] <= init_hi[i]))
                throw std::invalid_argument("SearchSpace: init_lo must not exceed init_hi");
        if (boundary == BoundaryPolicy::ClampLowerOnly && hard_lo.size() != dims)
            throw std::invalid_argument("SearchSpace: hard_lo required for ClampLowerOnly");
        if (!vmax.empty()) {
            if (vmax.size() != dims)
                throw std::invalid_argument("SearchSpace: vmax size mismatch");
            for (double v : vmax)
                if (!(v > 0.0)) throw std::invalid_argument("SearchSpace: vmax must be positive");
        }
    }
};

// One point uniform in the initialization box.  Components are drawn in
// dimension order so seeded replays are exact.
inline std::vector<double> sample_uniform(const SearchSpace& space, Rng& rng) {
    std::vector<double> x(space.dims);
    for (std::size_t i = 0; i < space.dims; ++i)
        x[i] = rng.uniform(space.init_lo[i], space.init_hi[i]);
    return x;
}

inline void apply_boundary(const SearchSpace& space, std::span<double> position) {
    if (space.boundary != BoundaryPolicy::ClampLowerOnly) return;
    for (std::size_t i = 0; i < space.dims; ++i)
        if (position[i] < space.hard_lo[i]) position[i] = space.hard_lo[i];
}

inline std::vector<double> apply_boundary_copy(const SearchSpace& space,
                                               std::vector<double> position) {
    apply_boundary(space, position);
    return position;
}

} // namespace metaopt
