#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace neyman {

namespace detail {

// splitmix64 (Vigna, public domain): advances x and returns a mixed word.
inline std::uint64_t splitmix64(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl64(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace detail

/// Split-stream PRNG: xoshiro256++ with state expanded from (seed, stream_id)
/// via splitmix64. Each Monte Carlo replication owns one stream; identical
/// (seed, stream_id) reproduces the exact draw sequence, distinct stream_ids
/// give unrelated state words.
class RngStream {
public:
    using result_type = std::uint64_t;

    RngStream() : RngStream(0, 0) {}

    RngStream(std::uint64_t seed, std::uint64_t stream_id)
        : seed_(seed), stream_(stream_id) {
        std::uint64_t key = seed;
        const std::uint64_t a = detail::splitmix64(key);
        const std::uint64_t b = detail::splitmix64(key);
        std::uint64_t z = stream_id ^ a;
        state_[0] = detail::splitmix64(z);
        state_[1] = detail::splitmix64(z) ^ b;
        state_[2] = detail::splitmix64(z);
        state_[3] = detail::splitmix64(z);
        if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) {
            state_[0] = 0x853C49E6748FEA9Bull;
        }
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_id() const { return stream_; }

    std::uint64_t next_u64() {
        const std::uint64_t result =
            detail::rotl64(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl64(state_[3], 45);
        return result;
    }

    /// Uniform double in [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    /// Standard normal via Box-Muller.
    double normal() {
        double u1 = next_unit();
        const double u2 = next_unit();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

    // UniformRandomBitGenerator interface.
    static constexpr result_type min() { return 0; }
    static constexpr result_type max() {
        return std::numeric_limits<std::uint64_t>::max();
    }
    result_type operator()() { return next_u64(); }

private:
    std::array<std::uint64_t, 4> state_{};
    std::uint64_t seed_ = 0;
    std::uint64_t stream_ = 0;
};

/// Order-sensitive 64-bit hash combiner for deriving replication stream ids
/// from (experiment tag, cell coordinates, replication index).
inline std::uint64_t fold_stream(std::uint64_t h, std::uint64_t v) {
    std::uint64_t x = h ^ (v + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2));
    return detail::splitmix64(x);
}

}  // namespace neyman
