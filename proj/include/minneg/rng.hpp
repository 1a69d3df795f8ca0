#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace minneg {

/// Deterministic random stream: mt19937_64 (bit-exact per the standard)
/// seeded through a splitmix64 finalizer so that consecutive seeds give
/// decorrelated streams. Uniform and Gaussian draws are built from raw 64-bit
/// words with plain IEEE arithmetic, so a fixed seed reproduces the same
/// values on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(scramble(seed)) {}

    std::uint64_t next_u64() { return eng_(); }

    /// Uniform in [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    /// Uniform in (0, 1].
    double uniform_open() { return 1.0 - uniform(); }

    /// Standard normal via Box-Muller; generates pairs and caches the spare.
    double gauss() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform_open()));
        const double t = 6.283185307179586476925286766559 * uniform();
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

    /// Exponential with unit mean; used for flat-simplex weights.
    double exponential() { return -std::log(uniform_open()); }

private:
    static std::uint64_t scramble(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace minneg
