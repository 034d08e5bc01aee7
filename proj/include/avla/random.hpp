#ifndef AVLA_RANDOM_HPP
#define AVLA_RANDOM_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace avla {

/// Deterministic seeded random stream built on the splitmix64 generator.
///
/// Two streams constructed from the same seed produce identical sample
/// sequences. Independent sub-streams are obtained with fork(label); forking
/// mixes (seed, label) and does not advance the parent state, so per-run and
/// per-member streams are reproducible regardless of consumption order.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), state_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Derive an independent child stream from (seed, label).
    RandomStream fork(std::uint64_t label) const {
        return RandomStream(mix(mix(seed_ + 0x9e3779b97f4a7c15ULL, label), 0xd1b54a32d192ed03ULL));
    }

    std::uint64_t next_u64() {
        // splitmix64 (Steele, Lea, Flood 2014)
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform draw on [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n-1].
    std::uint64_t uniform_index(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("uniform_index: n must be positive");
        // Lemire's multiply-shift; bias is ~n/2^64, immaterial at these scales.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
    }

    /// One normal(mean, sd) draw clamped into [0, 1].
    /// Out-of-range values are truncated, not resampled.
    double normal_truncated01(double mean, double sd) {
        double z = normal(mean, sd);
        if (z < 0.0) return 0.0;
        if (z > 1.0) return 1.0;
        return z;
    }

    /// Cauchy(location, scale) draw mapped into (0, 1]: draws above 1 are
    /// replaced by 1, draws at or below 0 are regenerated. A retry cap keeps
    /// the worst case bounded; the fallback returns the scale value.
    double cauchy_positive_clamped(double location, double scale) {
        for (int attempt = 0; attempt < 100; ++attempt) {
            double z = cauchy(location, scale);
            if (z > 1.0) return 1.0;
            if (z > 0.0) return z;
        }
        return scale;
    }

    double normal(double mean, double sd) {
        // Box-Muller; consumes two uniforms per call, no cached spare, so the
        // stream position stays a simple function of the call count.
        double u1 = uniform01();
        double u2 = uniform01();
        double r = std::sqrt(-2.0 * std::log1p(-u1));
        return mean + sd * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    double cauchy(double location, double scale) {
        double u = uniform01();
        return location + scale * std::tan(std::numbers::pi * (u - 0.5));
    }

private:
    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        std::uint64_t z = a ^ (b + 0x9e3779b97f4a7c15ULL + (a << 6) + (a >> 2));
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::uint64_t state_;
};

} // namespace avla

#endif
