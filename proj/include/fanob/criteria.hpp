#pragma once

#include "fanob/slope.hpp"

#include <string>
#include <vector>

namespace fanob {

enum class Outcome {
    Decomposable,
    TrivialBundle,
    Contradiction,
    Inconclusive,
    CompleteIntersection,  // used by the codimension-two criteria
};

std::string outcome_name(Outcome o);

struct Justification {
    std::string criterion;
    std::string detail;
};

/// The outcome of a decision procedure together with the criteria that
/// fired and a human-auditable justification chain. `fired` is nonempty
/// unless the outcome is Inconclusive.
struct Verdict {
    Outcome outcome = Outcome::Inconclusive;
    std::vector<std::string> fired;
    std::vector<Justification> justification;

    /// Decomposable or TrivialBundle (a trivial bundle splits).
    bool concludes_split() const {
        return outcome == Outcome::Decomposable || outcome == Outcome::TrivialBundle;
    }
};

/// Input record for the splitting criteria. beta is the minimal twist with
/// nonzero sections; when the bundle is not stable and Delta >= 0, beta
/// pins rho through rho = 2*beta + c1 — supplying both with a mismatch is
/// rejected.
struct CriterionInput {
    BundleData data;
    QuadNumber tau;
    std::optional<QuadNumber> rho;
    std::optional<long long> beta;
    std::optional<bool> semistable_assumed;

    /// Validates the record; derives rho from beta (rho = 2 beta + c1)
    /// when rho is absent, Delta >= 0 and the bundle is taken non-stable.
    static CriterionInput make(BundleData data, QuadNumber tau,
                               std::optional<QuadNumber> rho = std::nullopt,
                               std::optional<long long> beta = std::nullopt,
                               std::optional<bool> semistable_assumed = std::nullopt);
};

/// tau >= 0 always, with equality only for the trivial bundle:
/// tau < 0 -> Contradiction, tau = 0 -> TrivialBundle, else Inconclusive.
Verdict tau_nonnegative_gate(const CriterionInput& in);

/// Delta >= 0 only. The pseudoeffective window forces an integer in
///     I = [-(c1+sqrt(Delta))/2 - eps'/2, -(c1+sqrt(Delta))/2],
/// eps' = (tau - sqrt(Delta))/n. Empty intersection with Z contradicts the
/// input; when the intersection is exactly the right endpoint (an
/// integer), the bundle splits. Also surfaces tau < sqrt(Delta) as a
/// Contradiction (inconsistent input).
Verdict interval_criterion(const CriterionInput& in);

/// Delta >= 0 only: if -(c1+sqrt(Delta))/2 is an integer and
/// tau < 2n + sqrt(Delta) (strict), the bundle is decomposable.
Verdict numsplit_criterion(const CriterionInput& in);

/// Counting bound on rational-curve families through a general point;
/// requires mu and the non-stability context (rho known or semistability
/// assumed). Decomposable when
///     tau < 2 i_X - rho - 4/mu   (not semistable, rho < 0), or
///     tau < 2 i_X - 6/mu         (semistable),
/// both strict. Also fires on the raw counting gap
///     mu/2 (tau + rho) + 1 < i_X mu - 1  (non-semistable case).
/// Assumes the family through a general point is proper; that hypothesis
/// is recorded in the justification.
Verdict nssemistable_criterion(const CriterionInput& in);

/// Delta >= 0 and mu required: tau < 2 i_X + sqrt(Delta) - 4/mu (strict)
/// forces decomposability.
Verdict counting_discriminant_criterion(const CriterionInput& in);

/// Decomposability is equivalent to tau + rho = 0. tau + rho < 0
/// contradicts positivity (the j = 1 intersection number 2 d_X (tau+rho)
/// would be negative); tau + rho > 0 means indecomposable whenever tau and
/// rho are exact, reported as Inconclusive with that note.
Verdict tau_plus_rho_criterion(const CriterionInput& in);

/// If Delta = t^2 exactly and some curve has splitting slope <= t, the
/// bundle is decomposable. The witness slope is typically
/// tau_of_splitting_type of an observed restriction.
Verdict delta_t2_criterion(const CriterionInput& in, const Rational& t,
                           std::optional<Rational> witness_slope);

/// Runs every applicable criterion in a fixed order:
///   tau-gate, tau-plus-rho, [Delta >= 0: interval, numsplit, counting-discriminant],
///   [Delta < 0: slope-gap, positivity-arg], ns-semistable.
/// Fired lists are merged in that order; Contradiction dominates, then
/// TrivialBundle, then Decomposable. Deterministic.
Verdict run_all(const CriterionInput& in);

}  // namespace fanob
