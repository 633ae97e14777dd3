#include "fanob/quad.hpp"

namespace fanob {

namespace {

// Pulls every square factor out of n (n > 0): n = f^2 * s. Trial division
// below the bound, then one integer-root check to catch a large square
// cofactor. Complete for the scales this library works at.
void extract_square_part(Int n, Int& f, Int& s) {
    f = 1;
    constexpr unsigned kTrialBound = 4096;
    for (Int p = 2; p <= kTrialBound && p * p <= n; ++p) {
        Int pp = p * p;
        while (n % pp == 0) {
            n /= pp;
            f *= p;
        }
    }
    Int r = isqrt_floor(n);
    if (r * r == n) {
        f *= r;
        n = 1;
    }
    s = n;
}

}  // namespace

QuadNumber::QuadNumber(const Rational& a, const Rational& b, const Rational& radicand)
    : a_(a), b_(b), d_(radicand) {
    if (d_ < 0) throw std::domain_error("QuadNumber: negative radicand");
    if (b_ == 0 || d_ == 0) {
        b_ = 0;
        d_ = 0;
        return;
    }
    Rational root;
    if (is_perfect_square(d_, &root)) {
        a_ += b_ * root;
        b_ = 0;
        d_ = 0;
        return;
    }
    // sqrt(p/q) = sqrt(p*q)/q; then strip square factors of p*q.
    Int p = num(d_), q = den(d_);
    Int f, s;
    extract_square_part(p * q, f, s);
    b_ *= Rational(f, q);
    d_ = Rational(s);
}

const Rational& QuadNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("QuadNumber: not a rational value");
    return a_;
}

QuadNumber QuadNumber::operator-() const {
    QuadNumber r;
    r.a_ = -a_;
    r.b_ = -b_;
    r.d_ = d_;
    return r;
}

QuadNumber QuadNumber::operator+(const QuadNumber& o) const {
    if (o.is_rational()) return QuadNumber(a_ + o.a_, b_, d_);
    if (is_rational()) return QuadNumber(a_ + o.a_, o.b_, o.d_);
    if (d_ != o.d_) throw std::invalid_argument("QuadNumber: mixed radicands in +");
    return QuadNumber(a_ + o.a_, b_ + o.b_, d_);
}

QuadNumber QuadNumber::operator-(const QuadNumber& o) const { return *this + (-o); }

QuadNumber QuadNumber::operator*(const QuadNumber& o) const {
    if (o.is_rational()) return QuadNumber(a_ * o.a_, b_ * o.a_, d_);
    if (is_rational()) return QuadNumber(a_ * o.a_, a_ * o.b_, o.d_);
    if (d_ != o.d_) throw std::invalid_argument("QuadNumber: mixed radicands in *");
    return QuadNumber(a_ * o.a_ + b_ * o.b_ * d_, a_ * o.b_ + b_ * o.a_, d_);
}

QuadNumber QuadNumber::operator/(const QuadNumber& o) const {
    if (o.is_zero()) throw std::domain_error("QuadNumber: division by zero");
    if (o.is_rational()) return QuadNumber(a_ / o.a_, b_ / o.a_, d_);
    if (!is_rational() && d_ != o.d_)
        throw std::invalid_argument("QuadNumber: mixed radicands in /");
    // Multiply by the conjugate; o irrational means its norm is nonzero.
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * o.d_;
    QuadNumber conj(o.a_, -o.b_, o.d_);
    QuadNumber prod = *this * conj;
    return QuadNumber(prod.a_ / norm, prod.b_ / norm, prod.d_);
}

std::string QuadNumber::str() const {
    if (is_rational()) return to_string(a_);
    std::string s;
    if (a_ != 0) s += to_string(a_) + (b_ > 0 ? " + " : " - ");
    else if (b_ < 0) s += "-";
    Rational babs = b_ < 0 ? Rational(-b_) : b_;
    if (babs != 1) s += to_string(babs) + "*";
    s += "sqrt(" + to_string(d_) + ")";
    return s;
}

int quad_sign(const QuadNumber& x) {
    const Rational& a = x.a();
    const Rational& b = x.b();
    if (b == 0) return sign_of(a);
    if (a == 0) return sign_of(b);
    int sa = sign_of(a), sb = sign_of(b);
    if (sa == sb) return sa;
    // Opposite signs: |a| vs |b|*sqrt(D) reduces to a^2 vs b^2*D.
    Rational diff = a * a - b * b * x.radicand();
    int s = sign_of(diff);
    return s == 0 ? 0 : s * sa;
}

int quad_cmp(const QuadNumber& x, const QuadNumber& y) { return quad_sign(x - y); }

int quad_plus_radical_sign(const QuadNumber& x, const Rational& c, const Rational& d2) {
    QuadNumber y(0, c, d2);
    if (y.is_rational()) return quad_sign(x + y.rational_value());
    if (x.is_rational() || x.radicand() == y.radicand()) return quad_sign(x + y);
    int sx = quad_sign(x);
    int sy = quad_sign(y);
    if (sy == 0) return sx;
    if (sx == 0) return sy;
    if (sx == sy) return sx;
    // Opposite signs: compare x^2 (stays in x's class) against the
    // rational y^2, then hand the sign to the larger magnitude.
    Rational y2 = y.b() * y.b() * y.radicand();
    int s = quad_sign(x * x - QuadNumber(y2));
    if (s == 0) return 0;
    return s > 0 ? sx : sy;
}

Ordering cmp_radicals(const QuadNumber& lhs, const QuadNumber& rhs) {
    if (lhs == rhs) return Ordering::Equal;
    for (unsigned bits = 64; bits <= 4096; bits *= 2) {
        RatInterval li = quad_enclosure(lhs, bits);
        RatInterval ri = quad_enclosure(rhs, bits);
        if (li.hi < ri.lo) return Ordering::Less;
        if (ri.hi < li.lo) return Ordering::Greater;
    }
    // Not separated at the cap: settle symbolically (complete for two
    // radicals, so this also certifies equality of distinct normal forms).
    QuadNumber x(lhs.a() - rhs.a(), lhs.b(), lhs.radicand());
    int s = quad_plus_radical_sign(x, -rhs.b(), rhs.radicand());
    if (s < 0) return Ordering::Less;
    if (s > 0) return Ordering::Greater;
    return Ordering::Equal;
}

RatInterval quad_enclosure(const QuadNumber& x, unsigned precision_bits) {
    if (x.is_rational()) return {x.a(), x.a()};
    RatInterval r = sqrt_enclosure(x.radicand(), precision_bits);
    if (x.b() >= 0) return {x.a() + x.b() * r.lo, x.a() + x.b() * r.hi};
    return {x.a() + x.b() * r.hi, x.a() + x.b() * r.lo};
}

Int quad_floor(const QuadNumber& x) {
    if (x.is_rational()) return floor_int(x.rational_value());
    RatInterval e = quad_enclosure(x, 64);
    Int m = floor_int(e.lo);
    // An irrational value is never an integer, so at most two exact
    // adjustments are needed around the enclosure.
    while (quad_sign(x - QuadNumber(Rational(m + 1))) > 0) ++m;
    while (quad_sign(x - QuadNumber(Rational(m))) < 0) --m;
    return m;
}

bool quad_is_integer(const QuadNumber& x) {
    return x.is_rational() && is_integer(x.rational_value());
}

ComplexQuad::ComplexQuad(const Rational& re_, const Rational& im_, const Rational& s2_)
    : re(re_), im(im_), s2(s2_) {
    if (s2 <= 0) throw std::domain_error("ComplexQuad: s2 must be positive");
}

ComplexQuad ComplexQuad::operator*(const ComplexQuad& o) const {
    if (s2 != o.s2) throw std::invalid_argument("ComplexQuad: mixed s2 in *");
    return ComplexQuad(re * o.re - im * o.im * s2, re * o.im + im * o.re, s2);
}

ComplexQuad ComplexQuad::pow(unsigned e) const {
    ComplexQuad acc(1, 0, s2);
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

bool arg_leq_pi(const ComplexQuad& z) {
    if (z.is_zero()) throw std::domain_error("arg_leq_pi: zero argument");
    return z.im >= 0;
}

bool arg_eq_pi(const ComplexQuad& z) {
    if (z.is_zero()) throw std::domain_error("arg_eq_pi: zero argument");
    return z.im == 0 && z.re < 0;
}

}  // namespace fanob
