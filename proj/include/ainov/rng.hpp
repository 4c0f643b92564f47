#pragma once

#include <cstdint>
#include <vector>

#include "ainov/rational.hpp"

namespace ainov {

/// Deterministic generator (splitmix64). std:: engines and distributions are
/// avoided on purpose: their output is implementation-defined and the CLI
/// promises byte-identical reports for a fixed seed on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, n). n must be positive.
    std::uint64_t below(std::uint64_t n) {
        // Rejection sampling keeps the distribution exact and portable.
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = next();
        while (v >= limit) v = next();
        return v % n;
    }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    template <typename T>
    const T& pick(const std::vector<T>& v) {
        return v[below(v.size())];
    }

    /// Small nonzero rational, numerator in ±[1,3], denominator in [1,3].
    Rat small_rational() {
        int num = range(1, 3) * (coin() ? 1 : -1);
        int den = range(1, 3);
        Rat r(num, den);
        r.canonicalize();
        return r;
    }

private:
    std::uint64_t state_;
};

}  // namespace ainov
