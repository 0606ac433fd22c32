#pragma once

#include <cstdint>
#include <cstddef>
#include <cmath>
#include <vector>

namespace metaopt {

// Seeded pseudo-random generator with a fixed, documented algorithm
// (xoshiro256** seeded through splitmix64).  The generation algorithm and
// every distribution transform below are implemented by hand so that a given
// seed replays the exact same draw sequence on any platform or standard
// library.  All stochastic code in this library draws through this class.
class Rng {
public:
    explicit Rng(std::uint64_t seed) noexcept { reseed(seed); }

    void reseed(std::uint64_t seed) noexcept {
        seed_ = seed;
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() noexcept {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53-bit resolution.
    double uniform01() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform double in [lo, hi).
    double uniform(double lo, double hi) noexcept {
        return lo + uniform01() * (hi - lo);
    }

    // Uniform integer in [0, n).  Fixed-point multiply keeps the mapping
    // platform independent; the O(2^-64) bias is irrelevant here.
    std::size_t below(std::size_t n) noexcept {
        return static_cast<std::size_t>(
            (static_cast<__uint128_t>(next_u64()) * n) >> 64);
    }

    bool bernoulli(double p) noexcept { return uniform01() < p; }

    // Standard normal via the polar method (used only for sampling analytic
    // Pareto fronts; not on any optimizer path).
    double gauss() noexcept {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double m = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * m;
        have_spare_ = true;
        return u * m;
    }

    // k distinct values from {0, ..., n-1} via partial Fisher-Yates.
    // Consumes exactly k draws.
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k);

    // In-place Fisher-Yates shuffle; consumes v.size()-1 draws.
    template <typename T>
    void shuffle(std::vector<T>& v) noexcept {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }
    static std::uint64_t splitmix64(std::uint64_t& x) noexcept {
        x += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = x;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_[4]{};
    std::uint64_t seed_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

inline std::vector<std::size_t> Rng::sample_without_replacement(std::size_t n, std::size_t k) {
    std::vector<std::size_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = i;
    std::vector<std::size_t> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k && i < n; ++i) {
        std::size_t j = i + below(n - i);
        std::swap(pool[i], pool[j]);
        out.push_back(pool[i]);
    }
    return out;
}

// Independent repeats derive their generator from the experiment base seed.
inline std::uint64_t run_seed(std::uint64_t base_seed, std::uint64_t run_index) noexcept {
    return base_seed + run_index;
}

} // namespace metaopt
