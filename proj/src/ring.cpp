#include "fanob/ring.hpp"

namespace fanob {

RingClass::RingClass(unsigned n, const Rational& delta) : n_(n), delta_(delta) {
    if (n == 0) throw std::invalid_argument("RingClass: n must be positive");
    c_.assign(n_ + 2, {Rational(0), Rational(0)});
}

RingClass RingClass::h_power(unsigned n, const Rational& delta, unsigned j) {
    RingClass r(n, delta);
    if (j <= n) r.c_[j].first = 1;  // H^j with j > n is zero
    return r;
}

RingClass RingClass::k_class(unsigned n, const Rational& delta) {
    RingClass r(n, delta);
    r.c_[0].second = 1;
    return r;
}

RingClass RingClass::neg_k_plus(unsigned n, const Rational& delta, const Rational& t) {
    RingClass r(n, delta);
    r.c_[0].second = -1;
    r.c_[1].first = t;
    return r;
}

void RingClass::set_coeff(unsigned j, const Rational& a, const Rational& b) {
    if (j > n_ + 1) throw std::out_of_range("RingClass::set_coeff");
    // Normal form: H^j dies for j > n, K*H^j dies for j > n.
    c_[j].first = (j <= n_) ? a : Rational(0);
    c_[j].second = (j <= n_) ? b : Rational(0);
}

bool RingClass::is_zero() const {
    for (const auto& [a, b] : c_)
        if (a != 0 || b != 0) return false;
    return true;
}

void RingClass::check_compatible(const RingClass& o) const {
    if (n_ != o.n_ || delta_ != o.delta_)
        throw std::invalid_argument("RingClass: mismatched (n, delta)");
}

RingClass RingClass::operator+(const RingClass& o) const {
    check_compatible(o);
    RingClass r(n_, delta_);
    for (unsigned j = 0; j <= n_ + 1; ++j) {
        r.c_[j].first = c_[j].first + o.c_[j].first;
        r.c_[j].second = c_[j].second + o.c_[j].second;
    }
    return r;
}

RingClass RingClass::operator-(const RingClass& o) const { return *this + (o * Rational(-1)); }

RingClass RingClass::operator*(const RingClass& o) const {
    check_compatible(o);
    RingClass r(n_, delta_);
    for (unsigned j1 = 0; j1 <= n_; ++j1) {
        const auto& [a1, b1] = c_[j1];
        if (a1 == 0 && b1 == 0) continue;
        for (unsigned j2 = 0; j2 + j1 <= n_ + 2 && j2 <= n_; ++j2) {
            const auto& [a2, b2] = o.c_[j2];
            if (a2 == 0 && b2 == 0) continue;
            unsigned j = j1 + j2;
            // (a1 + b1 K)(a2 + b2 K) H^j
            //   = a1 a2 H^j + (a1 b2 + b1 a2) K H^j + b1 b2 delta H^(j+2)
            if (j <= n_) {
                r.c_[j].first += a1 * a2;
                r.c_[j].second += a1 * b2 + b1 * a2;
            }
            if (j + 2 <= n_) r.c_[j + 2].first += b1 * b2 * delta_;
        }
    }
    return r;
}

RingClass RingClass::operator*(const Rational& s) const {
    RingClass r(n_, delta_);
    for (unsigned j = 0; j <= n_ + 1; ++j) {
        r.c_[j].first = c_[j].first * s;
        r.c_[j].second = c_[j].second * s;
    }
    return r;
}

bool RingClass::operator==(const RingClass& o) const {
    return n_ == o.n_ && delta_ == o.delta_ && c_ == o.c_;
}

RingClass RingClass::pow(unsigned e) const {
    RingClass acc = h_power(n_, delta_, 0);  // the unit
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

std::string RingClass::str() const {
    std::string s;
    for (unsigned j = 0; j <= n_ + 1; ++j) {
        const auto& [a, b] = c_[j];
        if (a != 0) s += "(" + to_string(a) + ")H^" + std::to_string(j) + " + ";
        if (b != 0) s += "(" + to_string(b) + ")KH^" + std::to_string(j) + " + ";
    }
    if (s.empty()) return "0";
    return s.substr(0, s.size() - 3);
}

Rational ring_degree(const RingClass& x, const Int& d_x) {
    if (d_x <= 0) throw std::invalid_argument("ring_degree: d_X must be positive");
    return Rational(-2) * x.coeff(x.n()).second * Rational(d_x);
}

Rational positivity_form_ring(unsigned j, const Rational& rho_prime, const Rational& tau,
                              unsigned n, const Rational& delta, const Int& d_x) {
    if (j > n) throw std::invalid_argument("positivity_form_ring: j out of range");
    RingClass lhs = RingClass::neg_k_plus(n, delta, rho_prime);
    RingClass mid = RingClass::neg_k_plus(n, delta, tau).pow(j);
    RingClass tail = RingClass::h_power(n, delta, n - j);
    return ring_degree(lhs * mid * tail, d_x);
}

std::pair<Rational, Rational> linear_power_mod_delta(const Rational& tau, const Rational& delta,
                                                     unsigned e) {
    Rational p = 1, q = 0;
    for (unsigned i = 0; i < e; ++i) {
        Rational np = tau * p + delta * q;
        Rational nq = p + tau * q;
        p = np;
        q = nq;
    }
    return {p, q};
}

Rational positivity_form_closed(unsigned j, const Rational& rho_prime, const Rational& tau,
                                const Rational& delta, const Int& d_x) {
    auto [p, q] = linear_power_mod_delta(tau, delta, j);
    return Rational(d_x) * 2 * (p + rho_prime * q);
}

}  // namespace fanob
