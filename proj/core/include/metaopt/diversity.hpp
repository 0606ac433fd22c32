#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "metaopt/pareto.hpp"
#include "metaopt/problems.hpp"

namespace metaopt {

// Cell-occupation diversity score over one axis: boundary cells are scored
// from the two-cell lookup, interior cells from the three-cell sliding
// window, and the sum is normalized by the cell count.  The all-occupied
// pattern scores exactly 1.
double score_occupation(std::span<const std::uint8_t> occupation);

// Shape-aware per-axis cell boundaries for the analytic Pareto front of a
// DTLZ problem: the front surface is divided into `cells` equal pieces and
// projected on each objective axis, so cell width on the axis is inversely
// proportional to the local front slope.  Boundaries are computed as equal
// quantiles of the axis marginal of a dense uniform sample of the front
// (deterministic; independent of any run seed).
//
// Returned shape: one boundary vector of size cells+1 per objective axis.
std::vector<std::vector<double>> pf_cell_boundaries(ObjectiveId id, std::size_t objectives,
                                                    std::size_t cells,
                                                    std::size_t sample_size = 100000);

// Occupation of the projected cells for one axis.  Solutions projecting
// outside the front's axis range mark nothing.
std::vector<std::uint8_t> occupy_cells(std::span<const double> boundaries,
                                       std::span<const ObjectiveVector> solutions,
                                       std::size_t axis);

// Modified diversity metric: per objective, project front cells and obtained
// solutions on the axis, score the occupation pattern, then average over the
// objectives.  Result lies in [0, 1]; the ideal distribution scores 1.
double diversity_metric2(std::span<const ObjectiveVector> obtained,
                         const std::vector<std::vector<double>>& axis_boundaries);

double diversity_metric2(ObjectiveId id, std::span<const ObjectiveVector> obtained,
                         std::size_t objectives, std::size_t cells);

} // namespace metaopt
