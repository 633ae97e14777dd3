#include "fanob/slope.hpp"

namespace fanob {

namespace {

QuadNumber quad_pow(const QuadNumber& x, unsigned e) {
    QuadNumber acc(1);
    for (unsigned i = 0; i < e; ++i) acc = acc * x;
    return acc;
}

// Sign of tau - sqrt(delta) for tau rational or in Q(sqrt(delta)); two
// distinct radicals are routed through the two-radical kernel.
int tau_minus_sqrt_delta_sign(const QuadNumber& tau, const Rational& delta) {
    return quad_plus_radical_sign(tau, Rational(-1), delta);
}

}  // namespace

QuadNumber positivity_form(unsigned j, const Rational& rho_prime, const Rational& tau,
                           const BundleData& data) {
    return QuadNumber(
        positivity_form_ring(j, rho_prime, tau, data.n, discriminant(data), Int(data.d_x)));
}

bool check_slope_gap(const BundleData& data, const QuadNumber& tau) {
    Rational delta = discriminant(data);
    if (delta >= 0) throw std::domain_error("check_slope_gap: requires Delta < 0");
    if (data.n == 1) return true;  // tan(pi/2) pole: the upper bound is vacuous
    // 4 c2 / d - c1^2 = -Delta must be <= tau^2 * tan^2(pi/(n+1)).
    return cmp_vs_tan2_multiple(-delta, tau * tau, data.n + 1) <= 0;
}

QuadNumber window_epsilon(const BundleData& data, const QuadNumber& tau) {
    Rational delta = discriminant(data);
    if (delta < 0) throw std::domain_error("window_epsilon: requires Delta >= 0");
    int cmp = tau_minus_sqrt_delta_sign(tau, delta);
    if (cmp < 0)
        throw std::domain_error("window_epsilon: tau < sqrt(Delta) is inconsistent input");
    if (delta == 0) return tau / QuadNumber(Rational(data.n));
    QuadNumber sd = QuadNumber::sqrt_of(delta);
    QuadNumber plus = quad_pow(tau + sd, data.n);
    QuadNumber minus = quad_pow(tau - sd, data.n);
    QuadNumber den = plus - minus;
    if (den.is_zero()) return QuadNumber(0);  // only when tau = sqrt(Delta) = 0
    return QuadNumber(2) * sd * minus / den;
}

std::pair<QuadNumber, QuadNumber> rho_window(const BundleData& data, const QuadNumber& tau) {
    Rational delta = discriminant(data);
    QuadNumber eps = window_epsilon(data, tau);
    QuadNumber hi = -QuadNumber::sqrt_of(delta);
    return {hi - eps, hi};
}

bool check_relaxed_window_bound(unsigned n, const QuadNumber& tau, const QuadNumber& rho,
                    const Rational& delta) {
    if (delta < 0) throw std::domain_error("check_relaxed_window_bound: requires Delta >= 0");
    QuadNumber lin = tau + QuadNumber(Rational(n)) * rho;
    return quad_plus_radical_sign(lin, Rational(n - 1), delta) >= 0;
}

namespace {

ComplexQuad arg_product(unsigned n, const Rational& rho_prime, const Rational& tau,
                        const Rational& delta) {
    if (delta >= 0) throw std::domain_error("arg condition: requires Delta < 0");
    Rational u2 = -delta;
    ComplexQuad z(rho_prime, 1, u2);
    return z * ComplexQuad(tau, 1, u2).pow(n);
}

}  // namespace

bool check_arg_condition(unsigned n, const Rational& rho_prime, const Rational& tau,
                         const Rational& delta) {
    return arg_leq_pi(arg_product(n, rho_prime, tau, delta));
}

bool check_arg_eq_pi(unsigned n, const Rational& rho_prime, const Rational& tau,
                     const Rational& delta) {
    return arg_eq_pi(arg_product(n, rho_prime, tau, delta));
}

QuadNumber solve_divisorial_rho(unsigned n, const Rational& tau, const Rational& delta) {
    auto [p, q] = linear_power_mod_delta(tau, delta, n);
    // (-K + rho H)(-K + tau H)^n reduces to 2 d_X (p + rho q); the linear
    // coefficient q must not vanish for rho to be determined.
    if (q == 0)
        throw std::domain_error("solve_divisorial_rho: degenerate linear coefficient; "
                                "the second contraction cannot be divisorial");
    return QuadNumber(-p / q);
}

bool semistable_blowup_relation(unsigned n, const Rational& tau, long long c2, long long d) {
    if (n == 1) throw std::domain_error("semistable_blowup_relation: tan(pi/2) pole at n = 1");
    if (d == 0) throw std::invalid_argument("semistable_blowup_relation: d must be nonzero");
    Rational lhs = Rational(4 * c2, d);
    if (tau == 0) return lhs == 0;
    return cmp_vs_tan2_multiple(lhs, QuadNumber(tau * tau), 2 * n) == 0;
}

}  // namespace fanob
