#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace rss {

// SplitMix64 avalanche mix; the fixed per-trial seed derivation is
// trial_seed(master, i) = splitmix64(master + (i + 1) * golden gamma),
// so streams are independent of worker count and schedule.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Stream tags keep the sample streams of different estimators disjoint.
inline constexpr std::uint64_t kTrialStream = 0x0;
inline constexpr std::uint64_t kBankStream = 0x62616E6BULL;      // "bank"
inline constexpr std::uint64_t kReplayStream = 0x7265706CULL;    // "repl"
inline constexpr std::uint64_t kOracleStream = 0x6F72636CULL;    // "orcl"

enum class Distribution {
    uniform_pm1,  // uniform on [-1, 1] (default)
    uniform_ab,   // floor-density distribution hook; not implemented in v1
};

// Deterministic uniform sampler: mt19937_64 (bit-exact per the standard)
// mapped through an explicit 53-bit fraction, so doubles are identical on
// every platform.
class SampleStream {
public:
    explicit SampleStream(std::uint64_t seed,
                          Distribution dist = Distribution::uniform_pm1)
        : engine_(seed) {
        if (dist != Distribution::uniform_pm1) {
            throw std::invalid_argument(
                "only the uniform [-1,1] distribution is implemented");
        }
    }

    // Uniform on [0, 1).
    double next_unit() {
        return std::ldexp(static_cast<double>(engine_() >> 11), -53);
    }

    // Uniform on [-1, 1).
    double next() { return 2.0 * next_unit() - 1.0; }

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace rss
