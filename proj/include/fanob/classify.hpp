#pragma once

#include "fanob/criteria.hpp"

namespace fanob {

/// The type of the second extremal contraction of P(E). A P^1-bundle
/// contraction has ray length 2; reducible-fiber conic bundles and
/// codimension-two blow-ups have length 1.
enum class ContractionKind { P1Bundle, ConicBundleReducible, BlowUpCodim2 };

struct ContractionSpec {
    ContractionKind kind;
    int length;        // pinned by the kind
    long long h_dot_c; // H . C for a minimal curve C in the ray

    static ContractionSpec make(ContractionKind kind, long long h_dot_c);
};

/// tau = i_X - length / (H . C).
Rational tau_from_contraction(const ContractionSpec& spec, long long i_x);

/// One integer solution of (i_X mu - 2)(i_Y mu - 2) = 1, 2, 3 for
/// n = 2, 3, 5.
struct StructureSolution {
    long long i_x;
    long long i_y;
    long long mu;
    bool operator==(const StructureSolution&) const = default;
};

/// Named enumeration filters on top of the raw Diophantine solutions; each
/// can be switched off so the raw solution set stays inspectable.
struct EnumerationFilters {
    bool ko_bound = true;              // 1 <= i <= n+1
    bool positive_slopes = true;       // both factors (i mu - 2) positive
    bool plane_only_in_dim2 = true;    // n = 2 admits only i_X = i_Y = 3
    bool canonical_orientation = true; // keep i_X >= i_Y
};

/// All solutions of the two-bundle-structure equation for n in {2, 3, 5}.
/// With the default filters the result is exactly one solution per n.
/// The dimension-2 filter is geometric input (the plane is the only Fano
/// surface of Picard number one), not a consequence of the equation.
std::vector<StructureSolution> structure_equation_solutions(unsigned n,
                                                const EnumerationFilters& filters = {});

struct ClassificationRow {
    unsigned n;
    long long i_x;
    long long i_y;
    long long d;
    long long mu;
    Rational tau;
    Rational delta;
    long long c1;
    long long c2;
    std::string label;
};

/// Fills a row from an enumeration solution: tau = i_X - 2/mu,
/// Delta = -tau^2 tan^2(pi/(n+1)), c1 fixed by the parity i_X - c1 even,
/// c2 = d (c1^2 - Delta)/4. Throws when c2 is not a positive integer.
ClassificationRow derive_row(unsigned n, long long i_x, long long i_y, long long mu, long long d);

/// The full table for the given dimensions (default d = 1).
std::vector<ClassificationRow> classification_table(const std::vector<unsigned>& dims,
                                                    long long d = 1,
                                                    const EnumerationFilters& filters = {});

/// d_Y / d_X = (tau mu / (2 cos(pi/(n+1))))^(n-1); rational for
/// n in {2, 3, 5} since (2cos)^2 = 1, 2, 3 and n - 1 is even unless the
/// base is exactly 1.
Rational degree_ratio(const ClassificationRow& row);
Rational degree_ratio_value(const Rational& tau_mu, unsigned n);

/// Refutation trace for the smooth-conic-bundle alternative: checks
/// nu * nu' = 4 / (1 + tan^2(pi/(n+1))) with nu = 2 i_X mu' - 2 even,
/// applies the parity kill, and for the single survivor reproduces the
/// degree-8 contradiction through the ring reduction.
struct ConicExclusionReport {
    unsigned n;
    long long i_x, i_y, mu_prime;
    long long nu, nu_prime;
    Rational target;
    bool product_ok;
    bool parity_excluded;
    bool survivor;
    bool degree_contradiction;
    std::vector<std::string> trace;
};

ConicExclusionReport conic_exclusion_check(unsigned n, long long i_x, long long i_y,
                                           long long mu_prime);

/// Cross-check of the three equivalent characterizations in the Fano
/// range tau < i_X: table membership, even parity of i_X - c1, and
/// tau < i_X - 1. Throws std::domain_error outside the Fano range.
struct PbundleEquivalenceReport {
    bool table_member;
    bool parity_even;
    bool tau_below_ix_minus_1;
    bool consistent;
    std::string note;
};

PbundleEquivalenceReport check_pbundle_equivalence(const BundleData& data, const Rational& tau);

}  // namespace fanob
