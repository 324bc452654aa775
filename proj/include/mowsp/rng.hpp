#pragma once

#include <cmath>
#include <cstdint>

namespace mowsp {

// xoshiro256** seeded through splitmix64. Produces identical streams for
// identical seeds on every platform, which is what makes generated fixtures
// reproducible in CI.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) word = splitmix64(x);
    }

    std::uint64_t next_u64() {
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

    // [0, 1) with 53 random bits
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

    // [low, high)
    double uniform(double low, double high) { return low + (high - low) * next_double(); }

    // [0, bound); bound > 0
    std::uint64_t next_below(std::uint64_t bound) { return next_u64() % bound; }

    // Knuth's method in chunks so large means do not underflow exp(-mean).
    std::uint64_t poisson(double mean) {
        std::uint64_t total = 0;
        while (mean > 0.0) {
            const double chunk = mean > 30.0 ? 30.0 : mean;
            mean -= chunk;
            const double limit = std::exp(-chunk);
            std::uint64_t count = 0;
            double product = next_double();
            while (product > limit) {
                ++count;
                product *= next_double();
            }
            total += count;
        }
        return total;
    }

    // Stable derivation of an independent stream from a base seed.
    static std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
        std::uint64_t x = base ^ (0x9e3779b97f4a7c15ull + stream * 0xbf58476d1ce4e5b9ull);
        return splitmix64(x);
    }

private:
    static std::uint64_t splitmix64(std::uint64_t& x) {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t state_[4];
};

}  // namespace mowsp
