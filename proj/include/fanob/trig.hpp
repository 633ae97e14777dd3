#pragma once

#include "fanob/quad.hpp"

namespace fanob {

/// tan^2(pi/m). The value is rational exactly for m in {1, 3, 4, 6}
/// (0, 3, 1, 1/3); tan(pi/2) is a pole, so m = 2 throws. Every other m
/// yields an irrational value, reported with a certified enclosure of
/// width <= 2^-precision_bits.
struct Tan2 {
    bool is_rational;
    Rational value;        // meaningful when is_rational
    RatInterval enclosure; // always filled (point interval when rational)
};

Tan2 tan2_pi_over(unsigned m, unsigned precision_bits = 128);

/// Raised when an interval comparison cannot be settled below the
/// precision cap (only reachable when the two sides are genuinely equal
/// through an irrational tan^2 value, which is outside the supported
/// input range).
struct UndecidableComparison : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Exact sign of lhs - coeff * tan^2(pi/m), for coeff >= 0. Rational
/// tan^2 values are decided symbolically; the rest by enclosure
/// refinement from 64 up to 4096 bits.
int cmp_vs_tan2_multiple(const Rational& lhs, const QuadNumber& coeff, unsigned m);

}  // namespace fanob
