#ifndef RSDLOG_RNG_HPP
#define RSDLOG_RNG_HPP

#include <cstdint>
#include <random>

namespace rsdlog {

/// Seeded generator with explicit stream splitting.
///
/// All randomness in the library flows through this wrapper so that a run is
/// reproducible from a single 64-bit seed. `uniform` uses rejection sampling
/// instead of std::uniform_int_distribution, whose output is
/// implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }

    /// Uniform value in [0, bound). bound must be positive.
    std::uint64_t uniform(std::uint64_t bound) {
        // rejection sampling on the top of the 64-bit range
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    /// Uniform in [lo, hi] inclusive.
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
        return lo + uniform(hi - lo + 1);
    }

    double uniform_real() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform_real() < p; }

    /// Derive an independent child stream. Tags keep module streams apart
    /// when one run seeds several subsystems.
    Rng child(std::uint64_t tag) {
        std::uint64_t s = mix(eng_() ^ mix(tag + 0x9e3779b97f4a7c15ULL));
        return Rng(s);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::mt19937_64 eng_;
};

} // namespace rsdlog

#endif
