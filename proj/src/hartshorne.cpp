#include "fanob/hartshorne.hpp"

namespace fanob {

void NCIData::validate() const {
    if (n < 8) throw std::invalid_argument("NCIData: requires ambient dimension n >= 8");
    if (c1 < 2) throw std::invalid_argument("NCIData: c1 = (n+1) - i_Y must be >= 2");
    if (nci_type) {
        auto [a, b] = *nci_type;
        if (a < 1 || a > b) throw std::invalid_argument("NCIData: type needs 1 <= a <= b");
        if (delta != Rational((b - a) * (b - a)))
            throw std::invalid_argument("NCIData: Delta must equal (b-a)^2 for type (a,b)");
    }
    if (c2_twisted && *c2_twisted < 0)
        throw std::invalid_argument("NCIData: c2_twisted must be nonnegative");
}

std::string TwoRadicalBound::str() const {
    return to_string(base) + " + sqrt(" + to_string(rad1) + ") + sqrt(" + to_string(rad2) + ")";
}

int cmp_vs_two_radical_bound(const Rational& lhs, const TwoRadicalBound& bound) {
    // lhs - base - sqrt(rad1) - sqrt(rad2)
    QuadNumber x(lhs - bound.base, Rational(-1), bound.rad1);
    return quad_plus_radical_sign(x, Rational(-1), bound.rad2);
}

TwoRadicalBound c1_split_threshold(unsigned n, const Rational& delta) {
    if (delta <= 0) throw std::domain_error("c1_split_threshold: requires Delta > 0");
    if (n < 8) throw std::invalid_argument("c1_split_threshold: requires n >= 8");
    Rational nn(n);
    return {Rational(3), (nn * nn - 4) * (nn - 3), delta};
}

Verdict c1_threshold_criterion(unsigned n, const Rational& delta, long long c1) {
    TwoRadicalBound t = c1_split_threshold(n, delta);
    Verdict v;
    if (cmp_vs_two_radical_bound(Rational(c1), t) <= 0) {
        v.outcome = Outcome::Decomposable;
        v.fired.push_back("c1-threshold");
        v.justification.push_back({"c1-threshold",
                                   "c1 = " + std::to_string(c1) + " <= " + t.str() +
                                       ": the associated bundle decomposes"});
    } else {
        v.outcome = Outcome::Inconclusive;
        v.justification.push_back(
            {"c1-threshold", "c1 = " + std::to_string(c1) + " > " + t.str()});
    }
    return v;
}

EpsilonBounds epsilon_bounds(unsigned n, const Rational& delta, const Rational& tau_y,
                             long long c2_twisted) {
    if (delta <= 0) throw std::domain_error("epsilon_bounds: requires Delta > 0");
    if (n < 4) throw std::invalid_argument("epsilon_bounds: requires n >= 4");
    if (c2_twisted < 0) throw std::invalid_argument("epsilon_bounds: c2_twisted >= 0 required");
    QuadNumber sd = QuadNumber::sqrt_of(delta);
    if (quad_plus_radical_sign(QuadNumber(tau_y), Rational(-1), delta) <= 0)
        throw std::domain_error("epsilon_bounds: requires tau_Y > sqrt(Delta)");
    Rational c2t(c2_twisted);
    EpsilonBounds out{
        QuadNumber::sqrt_of(c2t),
        QuadNumber(c2t) / sd,
        (QuadNumber(tau_y) - sd) / QuadNumber(Rational(n - 2)),
        (QuadNumber(tau_y) - sd) * (QuadNumber(tau_y) - sd) /
            (QuadNumber(Rational((n - 2) * (n - 3))) * sd),
        false,
        false,
    };
    // tau_Y - sqrt(Delta) - (n-2) sqrt(c2t) > 0
    out.cond1 = quad_plus_radical_sign(QuadNumber(tau_y, -1, delta),
                                       -Rational(n - 2), c2t) > 0;
    // tau_Y - sqrt(Delta) - sqrt((n-2)(n-3) c2t) > 0
    out.cond2 = quad_plus_radical_sign(QuadNumber(tau_y, -1, delta), Rational(-1),
                                       Rational((n - 2) * (n - 3)) * c2t) > 0;
    return out;
}

namespace {

Verdict ci_verdict(std::string criterion, std::string detail) {
    Verdict v;
    v.outcome = Outcome::CompleteIntersection;
    v.fired.push_back(criterion);
    v.justification.push_back({std::move(criterion), std::move(detail)});
    return v;
}

Verdict inconclusive(std::string criterion, std::string detail) {
    Verdict v;
    v.justification.push_back({std::move(criterion), std::move(detail)});
    return v;
}

}  // namespace

Verdict nci_criterion(unsigned n, long long a, long long b) {
    if (n < 8) throw std::invalid_argument("nci_criterion: requires n >= 8");
    if (a < 1 || a > b) throw std::invalid_argument("nci_criterion: requires 1 <= a <= b");
    if (a == 1)
        return ci_verdict("nci", "a = 1: the window width falls below 2 unconditionally");
    Int lhs = Int(n - 3) * (b - 1);
    Int rhs = Int(a - 2) * (a - 1);
    std::string ineq = "(n-3)(b-1) = " + lhs.str() + " vs (a-2)(a-1) = " + rhs.str();
    if (lhs > rhs)
        return ci_verdict("nci", ineq + ": strict, so Y is a complete intersection");
    return inconclusive("nci", ineq + ": not strict, criterion silent");
}

Verdict nci_delta0_criterion(unsigned n, const Rational& tau_y_bound) {
    if (n < 8) throw std::invalid_argument("nci_delta0_criterion: requires n >= 8");
    Rational cap = Rational(2) * (Rational(n) - 2);
    std::string ineq = "tau_Y <= " + to_string(tau_y_bound) + " vs 2(n-2) = " + to_string(cap);
    if (tau_y_bound < cap)
        return ci_verdict("nci-delta0", ineq + ": window width below 2, complete intersection");
    return inconclusive("nci-delta0", ineq + ": criterion silent");
}

Verdict nci_verdict(unsigned n, long long a, long long b) {
    if (a == b) return nci_delta0_criterion(n, Rational(2 * a - 2));
    return nci_criterion(n, a, b);
}

Rational rho_lower_bound(long long c1) {
    if (c1 < 2) throw std::invalid_argument("rho_lower_bound: requires c1 >= 2");
    return Rational(-c1 + 2);
}

long long default_c2_twisted(unsigned n) { return static_cast<long long>(n) + 2; }

BundleData nci_to_bundle(unsigned n, long long a, long long b) {
    BundleData d;
    d.n = n;
    d.i_x = n + 1;
    d.d = 1;
    d.d_x = 1;
    d.c1 = a + b;
    d.c2 = a * b;
    d.raw_c1_allowed = true;
    d.validate();
    return d;
}

}  // namespace fanob
