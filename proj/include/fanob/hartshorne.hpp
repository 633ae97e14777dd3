#pragma once

#include "fanob/criteria.hpp"

namespace fanob {

/// Numerical data of a smooth codimension-two subvariety Y of P^n,
/// n >= 8, through its associated rank-2 bundle: c1 = (n+1) - i_Y >= 2
/// (raw, not normalized), Delta = c1^2 - 4 c2. When Y is a numerical
/// complete intersection of type (a, b), Delta = (b-a)^2.
struct NCIData {
    unsigned n = 8;
    long long c1 = 2;
    Rational delta;
    std::optional<std::pair<long long, long long>> nci_type;  // (a, b), a <= b
    std::optional<long long> c2_twisted;                      // c2 of the twisted normal bundle

    void validate() const;
};

/// A value base + sqrt(rad1) + sqrt(rad2); comparisons against rationals
/// go through the exact two-radical kernel.
struct TwoRadicalBound {
    Rational base;
    Rational rad1;
    Rational rad2;

    std::string str() const;
};

/// Sign of lhs - bound, decided exactly.
int cmp_vs_two_radical_bound(const Rational& lhs, const TwoRadicalBound& bound);

/// The decomposability threshold for Delta > 0:
///     c1 <= sqrt((n^2 - 4)(n - 3)) + sqrt(Delta) + 3.
TwoRadicalBound c1_split_threshold(unsigned n, const Rational& delta);

/// Verdict form: Decomposable when c1 is at or below the threshold.
Verdict c1_threshold_criterion(unsigned n, const Rational& delta, long long c1);

/// The four bounds squeezing the window width, plus the two necessary
/// conditions they impose:
///     eps1 = sqrt(c2t)                 (lower, when Delta <= c2t)
///     eps2 = c2t / sqrt(Delta)         (lower, when Delta >= c2t)
///     del1 = (tau_Y - sqrt(Delta)) / (n-2)            (upper)
///     del2 = (tau_Y - sqrt(Delta))^2 / ((n-2)(n-3) sqrt(Delta))  (upper)
///     cond1: tau_Y > sqrt(Delta) + (n-2) sqrt(c2t)
///     cond2: tau_Y > sqrt(Delta) + sqrt((n-2)(n-3) c2t)
struct EpsilonBounds {
    QuadNumber eps1, eps2, del1, del2;
    bool cond1, cond2;
};

EpsilonBounds epsilon_bounds(unsigned n, const Rational& delta, const Rational& tau_y,
                             long long c2_twisted);

/// Complete-intersection criterion for a numerical complete intersection
/// of type (a, b), 1 <= a <= b, on P^n with n >= 8:
/// (n-3)(b-1) > (a-2)(a-1), with a = 1 firing unconditionally.
Verdict nci_criterion(unsigned n, long long a, long long b);

/// The Delta = 0 branch (a = b): fires when tau_Y_bound < 2(n-2), where
/// tau_Y_bound is the universal bound c1 - 2 = 2a - 2.
Verdict nci_delta0_criterion(unsigned n, const Rational& tau_y_bound);

/// Router: a = b goes to the Delta = 0 branch, a < b to the general one.
Verdict nci_verdict(unsigned n, long long a, long long b);

/// Certified lower bound on rho for the associated bundle, from sections
/// over 1-secant lines: rho >= -c1 + 2. Requires c1 >= 2.
Rational rho_lower_bound(long long c1);

/// Default for the twisted second Chern class when unknown: n + 2
/// (imported lower bound; flagged as an assumption by callers).
long long default_c2_twisted(unsigned n);

/// Maps NCI data into a raw-c1 bundle record on the ambient space
/// (d = d_X = 1), for cross-checking against the splitting criteria.
BundleData nci_to_bundle(unsigned n, long long a, long long b);

}  // namespace fanob
