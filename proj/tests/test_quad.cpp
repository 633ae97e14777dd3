#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanob/quad.hpp"
#include "fanob/trig.hpp"

#include <random>

using namespace fanob;

TEST_CASE("rational helpers") {
    CHECK(parse_rational("3/4") == Rational(3, 4));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(Rational(-3, 7)) == "-3/7");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("a"), std::invalid_argument);
    CHECK(floor_int(Rational(-7, 2)) == -4);
    CHECK(floor_int(Rational(7, 2)) == 3);
    CHECK(ceil_int(Rational(-7, 2)) == -3);
    Rational root;
    CHECK(is_perfect_square(Rational(49, 9), &root));
    CHECK(root == Rational(7, 3));
    CHECK_FALSE(is_perfect_square(Rational(8), nullptr));
}

TEST_CASE("sqrt_enclosure") {
    auto point = sqrt_enclosure(Rational(4), 16);
    CHECK(point.lo == 2);
    CHECK(point.hi == 2);

    auto zero = sqrt_enclosure(Rational(0), 10);
    CHECK(zero.lo == 0);
    CHECK(zero.hi == 0);

    auto e = sqrt_enclosure(Rational(2), 10);
    CHECK(e.width() <= Rational(1, 1024));
    CHECK(e.lo * e.lo <= 2);   // the enclosure really brackets sqrt(2)
    CHECK(e.hi * e.hi >= 2);

    CHECK_THROWS_AS(sqrt_enclosure(Rational(-1), 8), std::domain_error);
}

TEST_CASE("quad normalization") {
    // sqrt(8) = 2*sqrt(2)
    QuadNumber x(0, 1, Rational(8));
    CHECK(x.b() == 2);
    CHECK(x.radicand() == 2);
    CHECK(x == QuadNumber(0, 2, Rational(2)));

    // perfect-square radicand collapses to a rational
    QuadNumber y(1, 3, Rational(49, 4));
    CHECK(y.is_rational());
    CHECK(y.rational_value() == Rational(23, 2));

    // rational radicand: sqrt(1/2) = sqrt(2)/2
    QuadNumber z(0, 1, Rational(1, 2));
    CHECK(z.radicand() == 2);
    CHECK(z.b() == Rational(1, 2));

    CHECK_THROWS_AS(QuadNumber(0, 1, Rational(-3)), std::domain_error);
}

TEST_CASE("quad_sign examples") {
    CHECK(quad_sign(QuadNumber(0, 0, Rational(5))) == 0);
    // 2 > sqrt(3) since 4 > 3
    CHECK(quad_sign(QuadNumber(-2, 1, Rational(3))) == -1);
    // sqrt(3) > 1
    CHECK(quad_sign(QuadNumber(-1, 1, Rational(3))) == 1);
}

TEST_CASE("cmp_radicals examples") {
    QuadNumber a(1, 1, Rational(2));
    QuadNumber b(1, 1, Rational(2));
    CHECK(cmp_radicals(a, b) == Ordering::Equal);

    CHECK(cmp_radicals(QuadNumber(0, 1, Rational(8)), QuadNumber(0, 2, Rational(2))) ==
          Ordering::Equal);

    // 3 + sqrt(300) < 25 since sqrt(300) < 22
    CHECK(cmp_radicals(QuadNumber(3, 1, Rational(300)), QuadNumber(Rational(25))) ==
          Ordering::Less);
    CHECK(cmp_radicals(QuadNumber(Rational(25)), QuadNumber(3, 1, Rational(300))) ==
          Ordering::Greater);

    // mixed radicands: sqrt(2) + sqrt(3) vs sqrt(10) (3.146... < 3.162...)
    CHECK(cmp_radicals(QuadNumber(2, 1, Rational(2)), QuadNumber(1, 1, Rational(10))) ==
          Ordering::Less);

    // equal values hidden behind a square factor too large for trial
    // division (10007^2 > 4096^2): the symbolic fallback must still
    // certify equality after the enclosure cap
    Rational big = Rational(10007) * 10007 * 2;
    CHECK(cmp_radicals(QuadNumber(0, 1, big), QuadNumber(0, 10007, Rational(2))) ==
          Ordering::Equal);
    CHECK(cmp_radicals(QuadNumber(0, 1, big), QuadNumber(0, 10008, Rational(2))) ==
          Ordering::Less);
}

TEST_CASE("quad arithmetic") {
    QuadNumber s2 = QuadNumber::sqrt_of(Rational(2));
    CHECK((s2 * s2).rational_value() == 2);
    QuadNumber inv = QuadNumber(1) / (QuadNumber(1) + s2);
    // 1/(1+sqrt2) = sqrt2 - 1
    CHECK(inv == s2 - QuadNumber(1));
    CHECK_THROWS_AS(s2 + QuadNumber::sqrt_of(Rational(3)), std::invalid_argument);
    CHECK_THROWS_AS(QuadNumber(1) / QuadNumber(0), std::domain_error);
}

TEST_CASE("quad_floor") {
    CHECK(quad_floor(QuadNumber(Rational(7, 2))) == 3);
    CHECK(quad_floor(QuadNumber::sqrt_of(Rational(2))) == 1);
    CHECK(quad_floor(-QuadNumber::sqrt_of(Rational(2))) == -2);
    CHECK(quad_floor(QuadNumber(0, 10, Rational(2))) == 14);  // 10*sqrt(2) = 14.14...
}

TEST_CASE("complex quad arg predicates") {
    ComplexQuad one(1, 0, Rational(1));
    CHECK(arg_leq_pi(one));
    CHECK_FALSE(arg_eq_pi(one));

    ComplexQuad neg3(-3, 0, Rational(1));
    CHECK(arg_eq_pi(neg3));
    CHECK(arg_leq_pi(neg3));

    ComplexQuad below(0, -1, Rational(3));  // -i*sqrt(3), arg = 3pi/2
    CHECK_FALSE(arg_leq_pi(below));

    ComplexQuad zero(0, 0, Rational(1));
    CHECK_THROWS_AS(arg_leq_pi(zero), std::domain_error);
    CHECK_THROWS_AS(arg_eq_pi(zero), std::domain_error);
}

namespace {

std::mt19937_64 rng(0x5eed1234abcdULL);

Rational random_rational(long long lim) {
    std::uniform_int_distribution<long long> numd(-lim, lim);
    std::uniform_int_distribution<long long> dend(1, 12);
    return Rational(numd(rng), dend(rng));
}

QuadNumber random_quad(long long lim) {
    std::uniform_int_distribution<long long> dd(0, lim);
    return QuadNumber(random_rational(lim), random_rational(lim), Rational(dd(rng)));
}

}  // namespace

TEST_CASE("quad_sign agrees with 128-bit enclosures") {
    for (int i = 0; i < 1000; ++i) {
        QuadNumber x = random_quad(1000);
        RatInterval e = quad_enclosure(x, 128);
        if (!e.contains_zero()) {
            int expect = e.lo > 0 ? 1 : -1;
            CHECK(quad_sign(x) == expect);
        } else {
            // the enclosure straddles zero only when the value is zero
            CHECK(quad_sign(x) == 0);
        }
        CHECK(quad_sign(x) == -quad_sign(-x));
    }
}

TEST_CASE("quad_sign is multiplicative within a radicand class") {
    std::uniform_int_distribution<long long> dd(2, 200);
    for (int i = 0; i < 500; ++i) {
        Rational d(dd(rng));
        QuadNumber x(random_rational(50), random_rational(50), d);
        QuadNumber y(random_rational(50), random_rational(50), d);
        if (!x.is_rational() && !y.is_rational() && x.radicand() != y.radicand()) continue;
        CHECK(quad_sign(x * y) == quad_sign(x) * quad_sign(y));
    }
}

TEST_CASE("cmp_radicals is a total order") {
    auto leq = [](const QuadNumber& x, const QuadNumber& y) {
        return cmp_radicals(x, y) != Ordering::Greater;
    };
    for (int i = 0; i < 400; ++i) {
        QuadNumber x = random_quad(30);
        QuadNumber y = random_quad(30);
        QuadNumber z = random_quad(30);
        // antisymmetry
        Ordering xy = cmp_radicals(x, y);
        Ordering yx = cmp_radicals(y, x);
        if (xy == Ordering::Equal) CHECK(yx == Ordering::Equal);
        if (xy == Ordering::Less) CHECK(yx == Ordering::Greater);
        if (xy == Ordering::Greater) CHECK(yx == Ordering::Less);
        // transitivity
        if (leq(x, y) && leq(y, z)) CHECK(leq(x, z));
    }
}

TEST_CASE("two-radical kernel vs enclosures") {
    std::uniform_int_distribution<long long> dd(0, 400);
    for (int i = 0; i < 500; ++i) {
        QuadNumber x = random_quad(100);
        Rational c = random_rational(100);
        Rational d2(dd(rng));
        int s = quad_plus_radical_sign(x, c, d2);
        RatInterval xi = quad_enclosure(x, 128);
        RatInterval yi = quad_enclosure(QuadNumber(0, c, d2), 128);
        RatInterval sum{xi.lo + yi.lo, xi.hi + yi.hi};
        if (!sum.contains_zero()) CHECK(s == (sum.lo > 0 ? 1 : -1));
    }
}

TEST_CASE("complex quad multiplication is associative and commutative") {
    std::uniform_int_distribution<long long> dd(1, 50);
    for (int i = 0; i < 300; ++i) {
        Rational s2(dd(rng));
        ComplexQuad x(random_rational(40), random_rational(40), s2);
        ComplexQuad y(random_rational(40), random_rational(40), s2);
        ComplexQuad z(random_rational(40), random_rational(40), s2);
        ComplexQuad xy = x * y;
        ComplexQuad yx = y * x;
        CHECK(xy.re == yx.re);
        CHECK(xy.im == yx.im);
        ComplexQuad a = (x * y) * z;
        ComplexQuad b = x * (y * z);
        CHECK(a.re == b.re);
        CHECK(a.im == b.im);
    }
}

TEST_CASE("tan2_pi_over exact values and Niven gate") {
    CHECK(tan2_pi_over(1).value == 0);
    CHECK(tan2_pi_over(3).value == 3);
    CHECK(tan2_pi_over(4).value == 1);
    CHECK(tan2_pi_over(6).value == Rational(1, 3));
    CHECK_THROWS_AS(tan2_pi_over(2), std::domain_error);

    // m = 5: irrational, but the exact value is 5 - 2*sqrt(5); the
    // enclosure must bracket it.
    Tan2 t5 = tan2_pi_over(5, 128);
    CHECK_FALSE(t5.is_rational);
    QuadNumber exact(5, -2, Rational(5));
    CHECK(quad_sign(exact - QuadNumber(t5.enclosure.lo)) >= 0);
    CHECK(quad_sign(exact - QuadNumber(t5.enclosure.hi)) <= 0);
    CHECK(t5.enclosure.width() <= Rational(1) / rat_pow(Rational(2), 128));

    for (unsigned m = 1; m <= 50; ++m) {
        if (m == 2) continue;
        bool expect_rational = (m == 1 || m == 3 || m == 4 || m == 6);
        CHECK(tan2_pi_over(m, 64).is_rational == expect_rational);
    }
}

TEST_CASE("cmp_vs_tan2_multiple") {
    // 1 vs 1*tan^2(pi/4) = 1: equal
    CHECK(cmp_vs_tan2_multiple(Rational(1), QuadNumber(1), 4) == 0);
    // 3 vs 4*tan^2(pi/6) = 4/3
    CHECK(cmp_vs_tan2_multiple(Rational(3), QuadNumber(4), 6) == 1);
    // 1/2 vs tan^2(pi/5) = 0.527...
    CHECK(cmp_vs_tan2_multiple(Rational(1, 2), QuadNumber(1), 5) == -1);
    CHECK(cmp_vs_tan2_multiple(Rational(3, 5), QuadNumber(1), 5) == 1);
}
