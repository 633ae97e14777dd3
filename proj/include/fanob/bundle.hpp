#pragma once

#include "fanob/quad.hpp"

#include <optional>

namespace fanob {

/// The invariant record of a pair (X, E): X a Fano n-fold with Picard and
/// fourth Betti numbers one, E a rank-2 bundle. Classes are identified
/// with integers through the ample generator H_X and the positive
/// generator Sigma of codimension-two cycles: c2(E) = c2 * Sigma,
/// H_X^2 = d * Sigma, d_X = H_X^n.
///
/// E is normalized (c1 in {0, -1}) unless raw_c1_allowed is set — the
/// ambient-space computations of the Hartshorne module need raw c1.
///
/// tau and rho, the slopes of the nef and pseudoeffective cones of P(E),
/// are optional inputs rather than derived quantities: computing them from
/// a bundle's defining data is an open analytic problem in general (it is
/// even unknown whether tau can differ from its supremum over rational
/// curves). The operations here state which bounds constrain them.
struct BundleData {
    unsigned n = 1;            // dim X
    unsigned i_x = 1;          // index of X; 1 <= i_X <= n+1
    long long d = 1;           // H_X^2 = d * Sigma, d > 0
    long long d_x = 1;         // H_X^n, > 0
    long long c1 = 0;
    long long c2 = 0;
    std::optional<long long> mu;  // H_X-degree of a dominating rational-curve family
    std::optional<QuadNumber> tau;
    std::optional<QuadNumber> rho;
    bool raw_c1_allowed = false;

    /// Throws std::invalid_argument when an invariant is violated.
    void validate() const;

    /// Validates and returns the same record (builder convenience).
    static BundleData checked(BundleData d);

    /// Builds a normalized record from raw Chern data: twists by k*H_X so
    /// that c1 lands in {0, -1}, with c2 adjusted by
    /// c2(E(k)) = c2 + d*k*c1 + d*k^2. Returns the record and the twist.
    static std::pair<BundleData, long long> from_raw(unsigned n, unsigned i_x, long long d,
                                                     long long d_x, long long c1_raw,
                                                     long long c2_raw);
};

/// Restriction of E to a rational curve: E|_l = O(a) + O(b), with
/// h_degree = H_X . l. Attached to a BundleData, a + b = h_degree * c1.
struct SplittingType {
    long long a = 0;
    long long b = 0;
    long long h_degree = 1;
};

/// Delta = c1^2 - 4*c2/d, the discriminant in Sigma-units. Negative for
/// stable-like behavior, a perfect square for split bundles; invariant
/// under twisting.
Rational discriminant(const BundleData& data);

/// Slope contribution of a splitting type: |b - a| / (H_X . l).
Rational tau_of_splitting_type(const SplittingType& st);

/// tau of the split bundle O(a) + O(b): -K + |b-a| H is semiample but not
/// ample on its projectivization.
Rational tau_of_split_bundle(long long a, long long b);

/// A bundle is Fano (its projectivization is a Fano manifold) iff
/// tau < i_X.
bool is_fano(const QuadNumber& tau, unsigned i_x);

}  // namespace fanob
