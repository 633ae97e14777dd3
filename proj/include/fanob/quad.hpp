#pragma once

#include "fanob/rational.hpp"

namespace fanob {

/// An element a + b*sqrt(D) of a real quadratic extension of Q, D >= 0.
///
/// Construction normalizes: square factors are pulled out of the radicand
/// (sqrt(8) becomes 2*sqrt(2)), and a rational value is always stored as
/// (a, 0, 0). After normalization the radicand is a squarefree integer,
/// so equal values in the supported range have identical components.
///
/// Arithmetic is closed within one radicand class (or against rationals);
/// mixing two distinct irrational radicands throws — comparisons across
/// classes go through cmp_radicals instead.
class QuadNumber {
public:
    QuadNumber() : a_(0), b_(0), d_(0) {}
    QuadNumber(const Rational& rational_value) : a_(rational_value), b_(0), d_(0) {}
    QuadNumber(long long rational_value) : a_(rational_value), b_(0), d_(0) {}
    QuadNumber(const Rational& a, const Rational& b, const Rational& radicand);

    static QuadNumber sqrt_of(const Rational& radicand) { return QuadNumber(0, 1, radicand); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& radicand() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    /// Only valid when is_rational().
    const Rational& rational_value() const;
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadNumber operator-() const;
    QuadNumber operator+(const QuadNumber& o) const;
    QuadNumber operator-(const QuadNumber& o) const;
    QuadNumber operator*(const QuadNumber& o) const;
    QuadNumber operator/(const QuadNumber& o) const;

    /// Normal-form component equality (equal values have equal normal forms).
    bool operator==(const QuadNumber& o) const { return a_ == o.a_ && b_ == o.b_ && d_ == o.d_; }

    std::string str() const;

private:
    Rational a_, b_, d_;
};

/// Exact sign of a + b*sqrt(D): 0 if zero, else +/-1. Decided by rational
/// sign tests and one squaring; no floating point.
int quad_sign(const QuadNumber& x);

/// Exact sign of x - y for x, y in the same radicand class (or rational).
int quad_cmp(const QuadNumber& x, const QuadNumber& y);

/// Exact sign of x + c*sqrt(d2) where x may carry a different radicand.
/// This is the two-radical decision kernel: it resolves A + B*sqrt(D1) +
/// C*sqrt(D2) by sign splitting and one more squaring, which is complete
/// for expressions with at most two distinct radicals.
int quad_plus_radical_sign(const QuadNumber& x, const Rational& c, const Rational& d2);

enum class Ordering { Less, Equal, Greater };

/// Exact ordering of two quadratic numbers with possibly different
/// radicands. Dyadic enclosures (64 bits, doubling, capped at 4096) decide
/// all separated pairs; the symbolic two-radical kernel settles equality
/// and anything the cap leaves open.
Ordering cmp_radicals(const QuadNumber& lhs, const QuadNumber& rhs);

/// Certified enclosure of the real value, width <= 2^-precision_bits +-eps
/// from the radical enclosure.
RatInterval quad_enclosure(const QuadNumber& x, unsigned precision_bits);

/// Largest integer <= x, decided exactly.
Int quad_floor(const QuadNumber& x);

/// True iff x is an integer (forces the radical part to vanish).
bool quad_is_integer(const QuadNumber& x);

/// A complex value re + i * im * sqrt(s2) with rational re, im and s2 > 0.
/// Closed under multiplication within one s2 class.
struct ComplexQuad {
    Rational re;
    Rational im;   // coefficient of i*sqrt(s2)
    Rational s2;

    ComplexQuad(const Rational& re_, const Rational& im_, const Rational& s2_);

    bool is_zero() const { return re == 0 && im == 0; }
    ComplexQuad operator*(const ComplexQuad& o) const;
    ComplexQuad pow(unsigned e) const;
};

/// With arg in [0, 2*pi): arg(z) <= pi iff Im(z) > 0, or Im(z) = 0 (the
/// real axis has arg 0 or pi). Throws std::domain_error on z = 0.
bool arg_leq_pi(const ComplexQuad& z);

/// arg(z) = pi iff z is a negative real. Throws std::domain_error on z = 0.
bool arg_eq_pi(const ComplexQuad& z);

}  // namespace fanob
