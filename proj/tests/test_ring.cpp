#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanob/ring.hpp"

#include <random>

using namespace fanob;

TEST_CASE("Chern-Wu reduction of K*K") {
    // n = 3, delta = -4: K^2 = -4 H^2
    RingClass k = RingClass::k_class(3, Rational(-4));
    RingClass kk = k * k;
    RingClass expect(3, Rational(-4));
    expect.set_coeff(2, Rational(-4), Rational(0));
    CHECK(kk == expect);
}

TEST_CASE("H^n * H = 0") {
    for (unsigned n = 1; n <= 5; ++n) {
        RingClass hn = RingClass::h_power(n, Rational(7), n);
        RingClass h = RingClass::h_power(n, Rational(7), 1);
        CHECK((hn * h).is_zero());
    }
}

TEST_CASE("(-K + tau H)^2 hand expansion") {
    // tau = 2, delta = -4, n = 3: (tau^2 + delta) H^2 - 2 tau K H = 0*H^2 - 4 KH
    RingClass x = RingClass::neg_k_plus(3, Rational(-4), Rational(2));
    RingClass sq = x * x;
    RingClass expect(3, Rational(-4));
    expect.set_coeff(1, Rational(0), Rational(-4));
    expect.set_coeff(2, Rational(0), Rational(0));
    CHECK(sq == expect);
}

TEST_CASE("mismatched (n, delta) throws") {
    RingClass a(3, Rational(-4));
    RingClass b(3, Rational(-3));
    RingClass c(2, Rational(-4));
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("degree map") {
    // (-K) * H^n with d_X = 1 has degree 2
    for (unsigned n = 2; n <= 4; ++n) {
        RingClass negk = RingClass::k_class(n, Rational(0)) * Rational(-1);
        RingClass hn = RingClass::h_power(n, Rational(0), n);
        CHECK(ring_degree(negk * hn, Int(1)) == 2);
        // H^(n+1) contributes nothing
        CHECK(ring_degree(RingClass::h_power(n, Rational(0), n) *
                              RingClass::h_power(n, Rational(0), 1),
                          Int(1)) == 0);
    }
    CHECK_THROWS_AS(ring_degree(RingClass(2, Rational(0)), Int(0)), std::invalid_argument);
}

TEST_CASE("degree example n=2 tau=1 delta=-3") {
    // (-K + H)^2 * H reduced and paired with d_X = 1 gives 4
    RingClass x = RingClass::neg_k_plus(2, Rational(-3), Rational(1));
    RingClass h = RingClass::h_power(2, Rational(-3), 1);
    CHECK(ring_degree(x * x * h, Int(1)) == 4);
}

TEST_CASE("positivity form examples") {
    // j = 0 is always 2*d_X, independent of the invariants
    CHECK(positivity_form_ring(0, Rational(5, 7), Rational(2), 3, Rational(-4), Int(1)) == 2);
    CHECK(positivity_form_ring(0, Rational(-3), Rational(1), 4, Rational(9), Int(5)) == 10);

    // j = 1 with rho' = -tau is the decomposability boundary: value 0
    CHECK(positivity_form_ring(1, Rational(-2), Rational(2), 3, Rational(-4), Int(1)) == 0);

    // j = n = 2, tau = rho' = 1, delta = -3: Im((1+i sqrt3)^3) = 0
    CHECK(positivity_form_ring(2, Rational(1), Rational(1), 2, Rational(-3), Int(1)) == 0);
    // ... and the complex-arithmetic oracle for the same value
    ComplexQuad z(1, 1, Rational(3));
    ComplexQuad z3 = z.pow(3);
    CHECK(z3.re == -8);
    CHECK(z3.im == 0);
}

namespace {
std::mt19937_64 rng(0x41a3c0de99ULL);

Rational rnd(long long lim) {
    std::uniform_int_distribution<long long> numd(-lim, lim);
    std::uniform_int_distribution<long long> dend(1, 9);
    return Rational(numd(rng), dend(rng));
}
}  // namespace

TEST_CASE("ring route equals closed form on random instances") {
    std::uniform_int_distribution<unsigned> nd(1, 7);
    std::uniform_int_distribution<long long> dxd(1, 6);
    for (int i = 0; i < 500; ++i) {
        unsigned n = nd(rng);
        std::uniform_int_distribution<unsigned> jd(0, n);
        unsigned j = jd(rng);
        Rational tau = rnd(20), rho = rnd(20), delta = rnd(30);
        Int dx(dxd(rng));
        CHECK(positivity_form_ring(j, rho, tau, n, delta, dx) ==
              positivity_form_closed(j, rho, tau, delta, dx));
    }
}

TEST_CASE("delta = 0 closed form is 2 d_X tau^(j-1) (tau + j rho')") {
    std::uniform_int_distribution<unsigned> nd(1, 7);
    for (int i = 0; i < 200; ++i) {
        unsigned n = nd(rng);
        std::uniform_int_distribution<unsigned> jd(1, n);
        unsigned j = jd(rng);
        Rational tau = rnd(15), rho = rnd(15);
        Rational expect = Rational(2) * rat_pow(tau, j - 1) * (tau + Rational(j) * rho);
        CHECK(positivity_form_ring(j, rho, tau, n, Rational(0), Int(1)) == expect);
    }
}

TEST_CASE("degree is linear") {
    for (int i = 0; i < 100; ++i) {
        RingClass x(3, Rational(5)), y(3, Rational(5));
        for (unsigned j = 0; j <= 3; ++j) {
            x.set_coeff(j, rnd(40), rnd(40));
            y.set_coeff(j, rnd(40), rnd(40));
        }
        CHECK(ring_degree(x + y, Int(3)) == ring_degree(x, Int(3)) + ring_degree(y, Int(3)));
    }
}

TEST_CASE("Chern-Wu idempotence") {
    // K^2 * H^(n-2) built in one shot equals the product assembled step by step
    for (unsigned n = 2; n <= 6; ++n) {
        Rational delta(-7, 2);
        RingClass k = RingClass::k_class(n, delta);
        RingClass direct = (k * k) * RingClass::h_power(n, delta, n - 2);
        RingClass stepped = k;
        stepped = stepped * k;
        for (unsigned i = 0; i < n - 2; ++i) stepped = stepped * RingClass::h_power(n, delta, 1);
        CHECK(direct == stepped);
        RingClass expect(n, delta);
        expect.set_coeff(n, delta, Rational(0));
        CHECK(direct == expect);
    }
}

TEST_CASE("ring is commutative and associative") {
    for (int i = 0; i < 60; ++i) {
        RingClass x(4, Rational(3)), y(4, Rational(3)), z(4, Rational(3));
        for (unsigned j = 0; j <= 4; ++j) {
            x.set_coeff(j, rnd(10), rnd(10));
            y.set_coeff(j, rnd(10), rnd(10));
            z.set_coeff(j, rnd(10), rnd(10));
        }
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
    }
}
