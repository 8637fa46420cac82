#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "optact/mat_core.hpp"

namespace optact::testing {

/// Seeded source for the hand-rolled property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed = 0x5eed'0f'0b71ca1ULL) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    Mat2 mat2(double bound) {
        return {uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound), uniform(-bound, bound)};
    }

    /// Unimodular matrix with every entry in [-bound, bound], by rejection.
    Mat2 unimodular(double bound) {
        for (;;) {
            const double a = uniform(-bound, bound);
            const double b = uniform(-bound, bound);
            const double c = uniform(-bound, bound);
            if (std::abs(a) < 0.05) {
                continue;
            }
            const double d = (1.0 + b * c) / a;
            if (std::abs(d) <= bound) {
                return {a, b, c, d};
            }
        }
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace optact::testing
