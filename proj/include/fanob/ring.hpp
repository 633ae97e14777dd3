#pragma once

#include "fanob/quad.hpp"

#include <utility>
#include <vector>

namespace fanob {

/// The truncated intersection ring of a projectivized rank-2 bundle over an
/// n-fold: polynomials in the hyperplane pullback H and the relative
/// canonical class K, with rational coefficients, reduced modulo
///
///     H^(n+1) = 0   and   K^2 = delta * H^2.
///
/// An element is stored in normal form as sum_j (a_j + b_j * K) * H^j with
/// a_j, b_j nonzero only for j <= n (the K*H^n monomial is the top-degree
/// 0-cycle; everything beyond is truncated away).
class RingClass {
public:
    RingClass(unsigned n, const Rational& delta);

    static RingClass zero(unsigned n, const Rational& delta) { return RingClass(n, delta); }
    static RingClass h_power(unsigned n, const Rational& delta, unsigned j);
    static RingClass k_class(unsigned n, const Rational& delta);
    /// -K + t*H, the workhorse linear form.
    static RingClass neg_k_plus(unsigned n, const Rational& delta, const Rational& t);

    unsigned n() const { return n_; }
    const Rational& delta() const { return delta_; }

    /// Coefficient pair (a_j, b_j) of (a_j + b_j K) H^j, 0 <= j <= n+1.
    const std::pair<Rational, Rational>& coeff(unsigned j) const { return c_.at(j); }
    void set_coeff(unsigned j, const Rational& a, const Rational& b);

    bool is_zero() const;

    RingClass operator+(const RingClass& o) const;
    RingClass operator-(const RingClass& o) const;
    RingClass operator*(const RingClass& o) const;
    RingClass operator*(const Rational& s) const;
    bool operator==(const RingClass& o) const;

    RingClass pow(unsigned e) const;

    std::string str() const;

private:
    void check_compatible(const RingClass& o) const;

    unsigned n_;
    Rational delta_;
    std::vector<std::pair<Rational, Rational>> c_;  // index j = 0..n+1
};

/// The degree map on top-degree classes, normalized by -K * H^n = 2 * d_X
/// (d_X the degree of the base): degree((a + b K) H^n) = -2 * b * d_X.
/// All lower-degree slots contribute zero.
Rational ring_degree(const RingClass& x, const Int& d_x);

/// The intersection number (-K + rho' H) * (-K + tau H)^j * H^(n-j),
/// computed through the ring reduction.
Rational positivity_form_ring(unsigned j, const Rational& rho_prime, const Rational& tau,
                              unsigned n, const Rational& delta, const Int& d_x);

/// The same number through the closed form: expand (tau + s)^j = p + q*s in
/// Q[s]/(s^2 - delta) by binomial recurrence; the value is
/// d_X * 2 * (p + rho' * q). Agrees with the ring route for every delta,
/// including delta = 0 where it reduces to 2 * tau^(j-1) * (tau + j rho').
Rational positivity_form_closed(unsigned j, const Rational& rho_prime, const Rational& tau,
                                const Rational& delta, const Int& d_x);

/// (tau + s)^e in Q[s]/(s^2 - delta), returned as (p, q) with value p + q*s.
std::pair<Rational, Rational> linear_power_mod_delta(const Rational& tau, const Rational& delta,
                                                     unsigned e);

}  // namespace fanob
