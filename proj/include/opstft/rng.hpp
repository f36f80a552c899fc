#pragma once

#include "opstft/types.hpp"

#include <cstdint>
#include <random>

namespace opstft {

// Deterministic cross-platform generator: mt19937_64 (bit-exact per the
// standard) feeding a 53-bit uniform and an explicit Box-Muller transform.
// std::normal_distribution is implementation-defined and is deliberately
// avoided so that seeded reports reproduce everywhere.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

    double uniform() {  // [0, 1)
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double gaussian() {
        double u1 = 1.0 - uniform();  // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    Complex cgaussian() {
        double re = gaussian();
        double im = gaussian();
        return Complex(re, im) / std::sqrt(2.0);
    }

    Signal signal(int n);
    Signal unit_signal(int n);
    OperatorMatrix matrix(int n);
    OperatorMatrix unit_matrix(int n);  // normalized to Hilbert-Schmidt norm 1
    ScalarField scalar_field(int n);
    RealGrid nonneg_grid(int n);        // entries in [0, 1)

private:
    std::mt19937_64 gen_;
};

}  // namespace opstft
