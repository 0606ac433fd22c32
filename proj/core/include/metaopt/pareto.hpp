#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace metaopt {

using ObjectiveVector = std::vector<double>;

// Relation of a to b under minimization.  `a dominates b` means a <= b
// componentwise with a != b; `weakly dominates` is plain componentwise <=.
// Equal pairs weakly dominate each other, so the classification reports the
// strongest relation that holds for the ordered pair.
enum class Dominance {
    Dominates,   // a <= b componentwise and a != b
    Dominated,   // b <= a componentwise and b != a
    Indifferent, // neither weakly dominates the other
    Equal,       // componentwise equal
};

bool weakly_dominates(std::span<const double> a, std::span<const double> b);
bool dominates(std::span<const double> a, std::span<const double> b);
Dominance compare(std::span<const double> a, std::span<const double> b);

// Indices of the members not dominated by any other member.
std::vector<std::size_t> nondominated_set(std::span<const ObjectiveVector> pop);

// Per-member count of solutions dominating it.
std::vector<std::size_t> domination_counts(std::span<const ObjectiveVector> pop);

// Fronts in dominance order (front 0 is the nondominated set), peeled with
// the bookkeeping fast nondominated sort.
std::vector<std::vector<std::size_t>> fast_nondominated_sort(
    std::span<const ObjectiveVector> pop);

// Crowding distances within one front; boundary points per objective get
// infinity.  `front` holds indices into pop.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> pop,
                                      std::span<const std::size_t> front);

} // namespace metaopt
