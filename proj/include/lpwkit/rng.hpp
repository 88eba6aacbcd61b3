#pragma once

#include <cstdint>

namespace lpwkit {

// Named, versioned pseudo-random sequence ("splitmix64/v1").  Generator
// algorithms are frozen per format_version: identical seed and parameters
// must give byte-identical documents forever, so no std:: distributions.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound); bound > 0.  Rejection-free modulo is fine here:
    /// bounds are tiny compared to 2^64 and reproducibility matters more than
    /// the last ulp of uniformity.
    uint64_t below(uint64_t bound) { return next() % bound; }

    /// Uniform double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    uint64_t state_;
};

}  // namespace lpwkit
