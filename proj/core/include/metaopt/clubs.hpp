#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "metaopt/rng.hpp"

namespace metaopt {

// Dynamic club membership of a swarm.  Every particle belongs to between
// min_level and max_level of the available clubs; a particle's neighborhood
// is the union of the members of all clubs it belongs to (itself included).
// Vacant clubs are allowed.
class ClubRegistry {
public:
    ClubRegistry(std::size_t particles, std::size_t clubs, std::size_t default_level,
                 std::size_t min_level, std::size_t max_level, std::size_t retention_period);

    // Each particle joins default_level distinct clubs chosen uniformly.
    void randomize_membership(Rng& rng);

    // Explicit membership assignment for constructing specific topologies.
    void set_membership(std::size_t particle, std::size_t club, bool member);

    std::size_t particles() const { return particles_; }
    std::size_t clubs() const { return clubs_; }
    std::size_t default_level() const { return default_level_; }
    std::size_t min_level() const { return min_level_; }
    std::size_t max_level() const { return max_level_; }
    std::size_t retention_period() const { return retention_period_; }

    bool is_member(std::size_t particle, std::size_t club) const {
        return membership_[particle * clubs_ + club] != 0;
    }
    std::size_t level(std::size_t particle) const { return levels_[particle]; }

    // Indices of the particles sharing a club with `particle`, itself always
    // included, in ascending order.
    std::vector<std::size_t> neighborhood(std::size_t particle) const;

    // One membership-update pass over the swarm in index order: a particle
    // that is strictly best in its neighborhood leaves one of its clubs at
    // random (if above min_level), a strictly worst one joins a random club
    // it is not in (if below max_level).  Every retention_period iterations,
    // the particles that did not show extreme performance this pass step one
    // club back toward the default level.
    void update(std::span<const double> pbest_values, std::int64_t iteration, Rng& rng);

private:
    void join(std::size_t particle, std::size_t club);
    void leave(std::size_t particle, std::size_t club);
    void leave_random_club(std::size_t particle, Rng& rng);
    void join_random_club(std::size_t particle, Rng& rng);

    std::size_t particles_;
    std::size_t clubs_;
    std::size_t default_level_;
    std::size_t min_level_;
    std::size_t max_level_;
    std::size_t retention_period_;
    std::vector<std::uint8_t> membership_; // particles x clubs
    std::vector<std::size_t> levels_;
};

} // namespace metaopt
