#include "metaopt/clubs.hpp"

#include <stdexcept>

namespace metaopt {

ClubRegistry::ClubRegistry(std::size_t particles, std::size_t clubs, std::size_t default_level,
                           std::size_t min_level, std::size_t max_level,
                           std::size_t retention_period)
    : particles_(particles),
      clubs_(clubs),
      default_level_(default_level),
      min_level_(min_level),
      max_level_(max_level),
      retention_period_(retention_period),
      membership_(particles * clubs, 0),
      levels_(particles, 0) {
    if (particles == 0 || clubs == 0)
        throw std::invalid_argument("ClubRegistry: need particles and clubs");
    if (min_level < 1 || min_level > default_level || default_level > max_level ||
        max_level > clubs)
        throw std::invalid_argument("ClubRegistry: need 1 <= min <= default <= max <= clubs");
    if (retention_period == 0)
        throw std::invalid_argument("ClubRegistry: retention period must be positive");
}

void ClubRegistry::randomize_membership(Rng& rng) {
    std::fill(membership_.begin(), membership_.end(), 0);
    std::fill(levels_.begin(), levels_.end(), 0);
    for (std::size_t p = 0; p < particles_; ++p)
        for (std::size_t c : rng.sample_without_replacement(clubs_, default_level_)) join(p, c);
}

void ClubRegistry::set_membership(std::size_t particle, std::size_t club, bool member) {
    if (particle >= particles_ || club >= clubs_)
        throw std::invalid_argument("ClubRegistry::set_membership: index out of range");
    if (member)
        join(particle, club);
    else
        leave(particle, club);
}

std::vector<std::size_t> ClubRegistry::neighborhood(std::size_t particle) const {
    std::vector<std::uint8_t> mark(particles_, 0);
    mark[particle] = 1;
    for (std::size_t c = 0; c < clubs_; ++c) {
        if (!is_member(particle, c)) continue;
        for (std::size_t q = 0; q < particles_; ++q)
            if (is_member(q, c)) mark[q] = 1;
    }
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < particles_; ++q)
        if (mark[q]) out.push_back(q);
    return out;
}

void ClubRegistry::join(std::size_t particle, std::size_t club) {
    if (!is_member(particle, club)) {
        membership_[particle * clubs_ + club] = 1;
        ++levels_[particle];
    }
}

void ClubRegistry::leave(std::size_t particle, std::size_t club) {
    if (is_member(particle, club)) {
        membership_[particle * clubs_ + club] = 0;
        --levels_[particle];
    }
}

void ClubRegistry::leave_random_club(std::size_t particle, Rng& rng) {
    std::size_t nth = rng.below(levels_[particle]);
    for (std::size_t c = 0; c < clubs_; ++c) {
        if (!is_member(particle, c)) continue;
        if (nth-- == 0) {
            leave(particle, c);
            return;
        }
    }
}

void ClubRegistry::join_random_club(std::size_t particle, Rng& rng) {
    std::size_t nth = rng.below(clubs_ - levels_[particle]);
    for (std::size_t c = 0; c < clubs_; ++c) {
        if (is_member(particle, c)) continue;
        if (nth-- == 0) {
            join(particle, c);
            return;
        }
    }
}

void ClubRegistry::update(std::span<const double> pbest_values, std::int64_t iteration,
                          Rng& rng) {
    if (pbest_values.size() != particles_)
        throw std::invalid_argument("ClubRegistry::update: pbest size mismatch");

    // Extreme performance is judged on pbest values with strict comparisons;
    // a tie means not extreme.  The flag is set by the test itself so that a
    // best/worst particle pinned at a level bound still skips retention.
    std::vector<std::uint8_t> extreme(particles_, 0);
    for (std::size_t j = 0; j < particles_; ++j) {
        bool best = true;
        for (std::size_t q : neighborhood(j))
            if (q != j && pbest_values[q] <= pbest_values[j]) {
                best = false;
                break;
            }
        if (best) {
            extreme[j] = 1;
            if (levels_[j] > min_level_) leave_random_club(j, rng);
        }

        bool worst = true;
        for (std::size_t q : neighborhood(j))
            if (q != j && pbest_values[q] >= pbest_values[j]) {
                worst = false;
                break;
            }
        if (worst) {
            extreme[j] = 1;
            if (levels_[j] < max_level_) join_random_club(j, rng);
        }
    }

    if (iteration % static_cast<std::int64_t>(retention_period_) == 0) {
        for (std::size_t j = 0; j < particles_; ++j) {
            if (extreme[j] || levels_[j] == default_level_) continue;
            if (levels_[j] > default_level_)
                leave_random_club(j, rng);
            else
                join_random_club(j, rng);
        }
    }
}

} // namespace metaopt
