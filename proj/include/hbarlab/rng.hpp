#pragma once

#include <cstdint>
#include <random>

namespace hbarlab {

/// Deterministic RNG wrapper. std::mt19937_64 is pinned by the standard,
/// but the distributions are not, so we map raw 64-bit draws to doubles
/// ourselves: outputs are bit-identical across platforms for a given seed.
class Rng {
 public:
    explicit Rng(std::uint64_t seed = 0) : gen_(seed) {}

    std::uint64_t raw() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi] (inclusive), via rejection-free modulo on
    /// a 64-bit draw; bias is negligible for the small ranges used here.
    long long uniform_int(long long lo, long long hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<long long>(gen_() % span);
    }

    /// Standard normal (Box-Muller, both values used on alternating calls).
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 1e-300) u1 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

 private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace hbarlab
