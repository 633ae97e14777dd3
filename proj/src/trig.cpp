#include "fanob/trig.hpp"

#include <mpfr.h>

#include <vector>

namespace fanob {

namespace {

Rational rational_from_mpfr(mpfr_srcptr v) {
    if (mpfr_zero_p(v)) return Rational(0);
    mpz_t z;
    mpz_init(z);
    mpfr_exp_t e = mpfr_get_z_2exp(z, v);
    std::vector<char> buf(mpz_sizeinbase(z, 10) + 2);
    mpz_get_str(buf.data(), 10, z);
    Int mant(buf.data());
    mpz_clear(z);
    Rational r(mant);
    if (e >= 0) r *= rat_pow(Rational(2), static_cast<unsigned>(e));
    else r /= rat_pow(Rational(2), static_cast<unsigned>(-e));
    return r;
}

// Directed-rounding enclosure of tan^2(pi/m) for m >= 3: pi/m lies in
// (0, pi/2), where tan is increasing and positive, so rounding the
// endpoints outward is sound.
RatInterval tan2_enclosure(unsigned m, unsigned precision_bits) {
    for (mpfr_prec_t prec = precision_bits + 64;; prec *= 2) {
        mpfr_t pi_lo, pi_hi, x_lo, x_hi, t_lo, t_hi;
        mpfr_inits2(prec, pi_lo, pi_hi, x_lo, x_hi, t_lo, t_hi, (mpfr_ptr)nullptr);
        mpfr_const_pi(pi_lo, MPFR_RNDD);
        mpfr_const_pi(pi_hi, MPFR_RNDU);
        mpfr_div_ui(x_lo, pi_lo, m, MPFR_RNDD);
        mpfr_div_ui(x_hi, pi_hi, m, MPFR_RNDU);
        mpfr_tan(t_lo, x_lo, MPFR_RNDD);
        mpfr_tan(t_hi, x_hi, MPFR_RNDU);
        mpfr_sqr(t_lo, t_lo, MPFR_RNDD);
        mpfr_sqr(t_hi, t_hi, MPFR_RNDU);
        RatInterval out{rational_from_mpfr(t_lo), rational_from_mpfr(t_hi)};
        mpfr_clears(pi_lo, pi_hi, x_lo, x_hi, t_lo, t_hi, (mpfr_ptr)nullptr);
        Rational target = Rational(1) / rat_pow(Rational(2), precision_bits);
        if (out.width() <= target) return out;
    }
}

}  // namespace

Tan2 tan2_pi_over(unsigned m, unsigned precision_bits) {
    if (m == 0) throw std::invalid_argument("tan2_pi_over: m must be positive");
    if (m == 2) throw std::domain_error("tan2_pi_over: tan(pi/2) pole");
    Rational exact;
    bool rational = true;
    switch (m) {
        case 1: exact = 0; break;
        case 3: exact = 3; break;
        case 4: exact = 1; break;
        case 6: exact = Rational(1, 3); break;
        default: rational = false; break;
    }
    if (rational) return {true, exact, {exact, exact}};
    return {false, Rational(0), tan2_enclosure(m, precision_bits)};
}

int cmp_vs_tan2_multiple(const Rational& lhs, const QuadNumber& coeff, unsigned m) {
    if (quad_sign(coeff) < 0)
        throw std::invalid_argument("cmp_vs_tan2_multiple: negative coefficient");
    Tan2 t = tan2_pi_over(m, 64);
    if (t.is_rational) return quad_sign(QuadNumber(lhs) - coeff * QuadNumber(t.value));
    if (coeff.is_zero()) return sign_of(lhs);
    for (unsigned bits = 64; bits <= 4096; bits *= 2) {
        RatInterval ti = tan2_pi_over(m, bits).enclosure;
        RatInterval ci = quad_enclosure(coeff, bits);
        // coeff >= 0 and tan^2 > 0: endpoint products bracket the value.
        RatInterval prod{ci.lo * ti.lo, ci.hi * ti.hi};
        if (lhs < prod.lo) return -1;
        if (lhs > prod.hi) return 1;
    }
    throw UndecidableComparison("cmp_vs_tan2_multiple: not separated at 4096 bits");
}

}  // namespace fanob
