#pragma once

#include "fanob/bundle.hpp"
#include "fanob/ring.hpp"
#include "fanob/trig.hpp"

namespace fanob {

/// The intersection number (-K + rho' H)(-K + tau H)^j H^(n-j) for the
/// given invariants, computed through the ring reduction. Nonnegative for
/// every 0 <= j <= n and rho' >= rho when -K + rho' H is pseudoeffective.
QuadNumber positivity_form(unsigned j, const Rational& rho_prime, const Rational& tau,
                           const BundleData& data);

/// The two-sided slope bound for Delta < 0:
///     c1^2 < 4 c2 / d <= c1^2 + tau^2 * tan^2(pi/(n+1)).
/// The left inequality is Delta < 0 itself (a precondition, violations
/// throw); the right is decided exactly when tan^2 is rational
/// (n in {2, 3, 5}) and by certified enclosures with escalation otherwise.
/// n = 1 puts the pole of tan at the bound, which is then vacuous.
bool check_slope_gap(const BundleData& data, const QuadNumber& tau);

/// The width of the pseudoeffective window for Delta >= 0:
///     eps = 2 sqrt(Delta) (tau - sqrt(Delta))^n
///           / ((tau + sqrt(Delta))^n - (tau - sqrt(Delta))^n)
/// for Delta > 0, and tau/n for Delta = 0. Exact in Q(sqrt(Delta)).
/// Requires tau >= sqrt(Delta); the degenerate tau = sqrt(Delta) = 0
/// case returns 0.
QuadNumber window_epsilon(const BundleData& data, const QuadNumber& tau);

/// The window itself: -sqrt(Delta) - eps <= rho <= -sqrt(Delta). It
/// degenerates to a point exactly when tau = sqrt(Delta), i.e. for direct
/// sums of line bundles.
std::pair<QuadNumber, QuadNumber> rho_window(const BundleData& data, const QuadNumber& tau);

/// tau + n*rho + (n-1)*sqrt(Delta) >= 0 for Delta >= 0 (the window bound
/// with eps relaxed to (tau - sqrt(Delta))/n). Exact sign test.
bool check_relaxed_window_bound(unsigned n, const QuadNumber& tau, const QuadNumber& rho,
                    const Rational& delta);

/// For Delta < 0 the positivity conditions collapse to
///     arg((rho' + i sqrt(-Delta)) (tau + i sqrt(-Delta))^n) <= pi
/// with arg in [0, 2pi); the j = n condition implies the rest.
bool check_arg_condition(unsigned n, const Rational& rho_prime, const Rational& tau,
                         const Rational& delta);

/// Same product, equality case: arg = pi exactly (the product is a
/// negative real). This is the divisorial/fiber-type boundary.
bool check_arg_eq_pi(unsigned n, const Rational& rho_prime, const Rational& tau,
                     const Rational& delta);

/// The rho forced by a divisorial second contraction: the unique solution
/// of (-K + rho H)(-K + tau H)^n = 0, solved linearly over
/// Q[s]/(s^2 - Delta). Throws std::domain_error when the linear
/// coefficient vanishes (the contraction cannot be divisorial).
QuadNumber solve_divisorial_rho(unsigned n, const Rational& tau, const Rational& delta);

/// Exact test of 4 c2 / d = tau^2 * tan^2(pi/(2n)) (the semistable
/// blow-up relation). Rational tan^2 only for n in {2, 3}; elsewhere the
/// equality is refuted by certified enclosures. n = 1 hits the pole and
/// throws.
bool semistable_blowup_relation(unsigned n, const Rational& tau, long long c2, long long d);

}  // namespace fanob
