#pragma once

#include <cstdint>
#include <random>

#include "abelorb/rational.hpp"

namespace abelorb {

/// Portable seeded draws. std distributions are implementation-defined, so
/// everything reduces the raw 64-bit engine output directly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform-ish integer in [lo, hi]; the modulo bias is irrelevant here.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(engine_() % span);
    }
    bool coin() { return (engine_() >> 63) != 0; }

    /// Positive rational with numerator in [1, 10^6] and denominator in [1, 1000].
    Rational positive_rational() {
        Rational q(static_cast<long>(uniform(1, 1000000)), static_cast<unsigned long>(uniform(1, 1000)));
        q.canonicalize();
        return q;
    }
    /// As positive_rational with a random sign.
    Rational nonzero_rational() {
        Rational q = positive_rational();
        return coin() ? Rational(-q) : q;
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

}  // namespace abelorb
