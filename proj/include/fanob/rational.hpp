#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace fanob {

// Arbitrary-precision integers and rationals. cpp_rational keeps the
// canonical form we rely on everywhere: denominator > 0 and
// gcd(numerator, denominator) = 1 after every operation.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }
inline int sign_of(const Int& z) { return z.sign(); }

inline bool is_integer(const Rational& q) { return den(q) == 1; }

/// Largest integer <= q.
Int floor_int(const Rational& q);

/// Smallest integer >= q.
Int ceil_int(const Rational& q);

/// q^e for e >= 0.
Rational rat_pow(const Rational& q, unsigned e);

/// Floor of the integer square root; z must be >= 0.
Int isqrt_floor(const Int& z);

/// True iff q is the square of a rational; the root (>= 0) is written to
/// *root when non-null. Exact: integer square roots on numerator and
/// denominator.
bool is_perfect_square(const Rational& q, Rational* root = nullptr);

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk or q = 0.
Rational parse_rational(std::string_view text);

/// A closed interval with rational endpoints.
struct RatInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool separated_from(const RatInterval& o) const { return hi < o.lo || o.hi < lo; }
};

/// Certified enclosure of sqrt(d): lo <= sqrt(d) <= hi with
/// hi - lo <= 2^-precision_bits and dyadic endpoints. Perfect squares
/// collapse to a point interval. Throws std::domain_error for d < 0.
RatInterval sqrt_enclosure(const Rational& d, unsigned precision_bits);

}  // namespace fanob
