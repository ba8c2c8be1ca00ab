#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string_view>

namespace minifab {

/// SplitMix64 stream. Small, fast, and fully specified here so that
/// seeded runs replay identically on every platform.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<std::uint64_t>::max(); }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) using the top 53 bits.
    double next_unit() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Exponential variate by inverse CDF; avoids the
    /// implementation-defined std::exponential_distribution.
    double next_exponential(double mean) { return -mean * std::log1p(-next_unit()); }

private:
    std::uint64_t state_;
};

/// Stable hash of a component path mixed with the master seed. Every
/// stochastic component owns an independent reproducible stream derived
/// from this value. Distinct master seeds map to distinct values for a
/// fixed path (the mixing is bijective in the seed).
std::uint64_t derive_component_seed(std::uint64_t master_seed, std::string_view component_path);

} // namespace minifab
