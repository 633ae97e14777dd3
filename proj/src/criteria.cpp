#include "fanob/criteria.hpp"

namespace fanob {

std::string outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Decomposable: return "Decomposable";
        case Outcome::TrivialBundle: return "TrivialBundle";
        case Outcome::Contradiction: return "Contradiction";
        case Outcome::Inconclusive: return "Inconclusive";
        case Outcome::CompleteIntersection: return "CompleteIntersection";
    }
    return "?";
}

namespace {

Verdict verdict(Outcome o, std::string criterion, std::string detail) {
    Verdict v;
    v.outcome = o;
    if (o != Outcome::Inconclusive) v.fired.push_back(criterion);
    v.justification.push_back({std::move(criterion), std::move(detail)});
    return v;
}

Verdict inconclusive(std::string criterion, std::string detail) {
    Verdict v;
    v.outcome = Outcome::Inconclusive;
    v.justification.push_back({std::move(criterion), std::move(detail)});
    return v;
}

// Sign of tau - sqrt(delta), handling tau rational or in Q(sqrt(delta)).
int tau_vs_sqrt_delta(const QuadNumber& tau, const Rational& delta) {
    return quad_plus_radical_sign(tau, Rational(-1), delta);
}

std::string qstr(const QuadNumber& q) { return q.str(); }

}  // namespace

CriterionInput CriterionInput::make(BundleData data, QuadNumber tau, std::optional<QuadNumber> rho,
                                    std::optional<long long> beta,
                                    std::optional<bool> semistable_assumed) {
    data.validate();
    CriterionInput in{std::move(data), std::move(tau), std::move(rho), beta, semistable_assumed};
    Rational delta = discriminant(in.data);
    // Delta >= 0 rules out stability, so the minimal twist with sections
    // pins the pseudoeffective slope: rho = 2*beta + c1.
    if (in.beta && delta >= 0) {
        QuadNumber pinned(Rational(2 * *in.beta + in.data.c1));
        if (!in.rho) {
            in.rho = pinned;
        } else if (!(*in.rho == pinned)) {
            throw std::invalid_argument(
                "CriterionInput: rho and beta disagree (rho must equal 2*beta + c1)");
        }
    }
    return in;
}

Verdict tau_nonnegative_gate(const CriterionInput& in) {
    int s = quad_sign(in.tau);
    if (s < 0)
        return verdict(Outcome::Contradiction, "tau-gate",
                       "tau = " + qstr(in.tau) + " < 0 violates the nef-slope lower bound");
    if (s == 0)
        return verdict(Outcome::TrivialBundle, "tau-gate",
                       "tau = 0 holds only for the trivial bundle O + O");
    return inconclusive("tau-gate", "tau = " + qstr(in.tau) + " > 0: gate passed");
}

Verdict interval_criterion(const CriterionInput& in) {
    Rational delta = discriminant(in.data);
    if (delta < 0) throw std::domain_error("interval_criterion: requires Delta >= 0");
    if (tau_vs_sqrt_delta(in.tau, delta) < 0)
        return verdict(Outcome::Contradiction, "sqrt-delta-bound",
                       "tau = " + qstr(in.tau) + " < sqrt(Delta) with Delta = " +
                           to_string(delta) + ": no such bundle exists");
    QuadNumber sd = QuadNumber::sqrt_of(delta);
    QuadNumber hi = (QuadNumber(Rational(-in.data.c1)) - sd) / QuadNumber(2);
    QuadNumber eps_prime = (in.tau - sd) / QuadNumber(Rational(in.data.n));
    QuadNumber lo = hi - eps_prime / QuadNumber(2);
    Int first = quad_floor(-lo);   // smallest integer >= lo, negated floor trick
    first = -first;
    Int last = quad_floor(hi);
    std::string iv = "I = [" + lo.str() + ", " + hi.str() + "]";
    if (first > last)
        return verdict(Outcome::Contradiction, "interval",
                       iv + " contains no integer, but the minimal section twist must lie in it");
    if (first == last && quad_is_integer(hi))
        return verdict(Outcome::Decomposable, "interval",
                       iv + " meets Z exactly at its right endpoint " + hi.str() +
                           ": the bundle splits");
    return inconclusive("interval", iv + " meets Z away from the right endpoint");
}

Verdict numsplit_criterion(const CriterionInput& in) {
    Rational delta = discriminant(in.data);
    if (delta < 0) throw std::domain_error("numsplit_criterion: requires Delta >= 0");
    QuadNumber sd = QuadNumber::sqrt_of(delta);
    QuadNumber endpoint = (QuadNumber(Rational(-in.data.c1)) - sd) / QuadNumber(2);
    if (!quad_is_integer(endpoint))
        return inconclusive("numsplit",
                            "-(c1 + sqrt(Delta))/2 = " + endpoint.str() + " is not an integer");
    // strict: tau < 2n + sqrt(Delta)
    QuadNumber bound = QuadNumber(Rational(2 * in.data.n)) + sd;
    if (quad_plus_radical_sign(in.tau - QuadNumber(Rational(2 * in.data.n)), Rational(-1), delta) <
        0)
        return verdict(Outcome::Decomposable, "numsplit",
                       "-(c1 + sqrt(Delta))/2 = " + endpoint.str() + " is an integer and tau = " +
                           qstr(in.tau) + " < " + bound.str());
    return inconclusive("numsplit", "tau = " + qstr(in.tau) + " >= " + bound.str());
}

Verdict nssemistable_criterion(const CriterionInput& in) {
    if (!in.data.mu) throw std::invalid_argument("nssemistable_criterion: mu is required");
    Rational mu(*in.data.mu);
    Rational two_ix(2 * in.data.i_x);
    bool semistable = in.semistable_assumed.value_or(false);
    if (!semistable && in.rho && in.rho->is_rational() && in.rho->rational_value() == 0)
        semistable = true;  // rho = 0 is the semistable-not-stable case
    const std::string hypothesis =
        " (assumes the degree-mu dominating family through a general point is proper)";
    if (semistable) {
        QuadNumber threshold(two_ix - Rational(6) / mu);
        if (quad_sign(in.tau - threshold) < 0)
            return verdict(Outcome::Decomposable, "ns-semistable",
                           "semistable case: tau = " + qstr(in.tau) + " < 2 i_X - 6/mu = " +
                               threshold.str() + hypothesis);
        return inconclusive("ns-semistable", "semistable case: tau = " + qstr(in.tau) +
                                                 " >= " + threshold.str());
    }
    if (!in.rho)
        return inconclusive("ns-semistable",
                            "not applicable: rho unknown and semistability not assumed");
    if (quad_sign(*in.rho) > 0)
        return inconclusive("ns-semistable", "not applicable: rho > 0 (stable-like input)");
    QuadNumber threshold = QuadNumber(two_ix - Rational(4) / mu) - *in.rho;
    // The counting form mu/2 (tau + rho) + 1 < i_X mu - 1 is the same
    // inequality rearranged; both views are reported when it holds.
    QuadNumber gap = QuadNumber(mu / 2) * (in.tau + *in.rho) + QuadNumber(1);
    QuadNumber need(Rational(in.data.i_x) * mu - 1);
    if (quad_sign(in.tau - threshold) < 0) {
        Verdict v = verdict(Outcome::Decomposable, "ns-semistable",
                            "tau = " + qstr(in.tau) + " < 2 i_X - rho - 4/mu = " +
                                threshold.str() + hypothesis);
        v.fired.push_back("family-counting");
        v.justification.push_back(
            {"family-counting", "splitting-type count through a general point: mu/2 (tau + "
                                "rho) + 1 = " + gap.str() + " < i_X mu - 1 = " + need.str()});
        return v;
    }
    return inconclusive("ns-semistable",
                        "tau = " + qstr(in.tau) + " >= " + threshold.str() +
                            " and the counting gap admits enough splitting types");
}

Verdict counting_discriminant_criterion(const CriterionInput& in) {
    Rational delta = discriminant(in.data);
    if (delta < 0) throw std::domain_error("counting_discriminant_criterion: requires Delta >= 0");
    if (!in.data.mu) throw std::invalid_argument("counting_discriminant_criterion: mu is required");
    Rational base = Rational(2 * in.data.i_x) - Rational(4) / Rational(*in.data.mu);
    // strict: tau < 2 i_X + sqrt(Delta) - 4/mu
    int s = quad_plus_radical_sign(in.tau - QuadNumber(base), Rational(-1), delta);
    std::string bound = "2 i_X + sqrt(Delta) - 4/mu = " + QuadNumber(base, 1, delta).str();
    if (s < 0)
        return verdict(Outcome::Decomposable, "counting-discriminant",
                       "tau = " + qstr(in.tau) + " < " + bound);
    return inconclusive("counting-discriminant", "tau = " + qstr(in.tau) + " >= " + bound);
}

Verdict tau_plus_rho_criterion(const CriterionInput& in) {
    if (!in.rho) throw std::invalid_argument("tau_plus_rho_criterion: rho is required");
    // tau + rho is at worst a two-radical expression; decide it through the
    // kernel so mixed radicand classes still get an exact answer.
    const QuadNumber& rho = *in.rho;
    QuadNumber partial(in.tau.a() + rho.a(), in.tau.b(), in.tau.radicand());
    int s = quad_plus_radical_sign(partial, rho.b(), rho.radicand());
    std::string values = "tau = " + qstr(in.tau) + ", rho = " + qstr(rho);
    if (s == 0)
        return verdict(Outcome::Decomposable, "tau-plus-rho",
                       "tau + rho = 0 (" + values +
                           "): the bundle is a direct sum of line bundles");
    if (s < 0)
        return verdict(Outcome::Contradiction, "tau-plus-rho",
                       "tau + rho < 0 (" + values +
                           ") makes the degree-one positivity value 2 d_X (tau + rho) negative");
    return inconclusive("tau-plus-rho", "tau + rho > 0 (" + values +
                                            "): indecomposable if tau and rho are exact");
}

Verdict delta_t2_criterion(const CriterionInput& in, const Rational& t,
                           std::optional<Rational> witness_slope) {
    Rational delta = discriminant(in.data);
    if (delta != t * t)
        return inconclusive("delta-square", "Delta = " + to_string(delta) + " differs from t^2 = " +
                                                to_string(t * t));
    if (!witness_slope)
        return inconclusive("delta-square",
                            "Delta = t^2 but no curve with splitting slope <= t was supplied");
    if (*witness_slope <= t)
        return verdict(Outcome::Decomposable, "delta-square",
                       "Delta = t^2 = " + to_string(delta) + " and a curve has splitting slope " +
                           to_string(*witness_slope) + " <= t");
    return inconclusive("delta-square", "witness slope " + to_string(*witness_slope) +
                                            " exceeds t = " + to_string(t));
}

namespace {

int severity(Outcome o) {
    switch (o) {
        case Outcome::Contradiction: return 3;
        case Outcome::TrivialBundle: return 2;
        case Outcome::Decomposable: case Outcome::CompleteIntersection: return 1;
        case Outcome::Inconclusive: return 0;
    }
    return 0;
}

void merge(Verdict& acc, const Verdict& v) {
    if (severity(v.outcome) > severity(acc.outcome)) acc.outcome = v.outcome;
    acc.fired.insert(acc.fired.end(), v.fired.begin(), v.fired.end());
    acc.justification.insert(acc.justification.end(), v.justification.begin(),
                             v.justification.end());
}

}  // namespace

Verdict run_all(const CriterionInput& in) {
    Verdict acc;
    merge(acc, tau_nonnegative_gate(in));
    if (in.rho) merge(acc, tau_plus_rho_criterion(in));
    Rational delta = discriminant(in.data);
    if (delta >= 0) {
        merge(acc, interval_criterion(in));
        merge(acc, numsplit_criterion(in));
        if (in.data.mu) merge(acc, counting_discriminant_criterion(in));
    } else {
        // Consistency gates for the stable range.
        try {
            if (!check_slope_gap(in.data, in.tau))
                merge(acc, verdict(Outcome::Contradiction, "slope-gap",
                                   "4 c2 / d = " + to_string(Rational(4 * in.data.c2, in.data.d)) +
                                       " exceeds c1^2 + tau^2 tan^2(pi/(n+1))"));
            else
                merge(acc, inconclusive("slope-gap",
                                        "4 c2 / d within the tau-governed discriminant gap"));
        } catch (const UndecidableComparison& e) {
            merge(acc, inconclusive("slope-gap", std::string("undecided: ") + e.what()));
        }
        if (in.rho && in.rho->is_rational() && in.tau.is_rational()) {
            bool ok = check_arg_condition(in.data.n, in.rho->rational_value(),
                                          in.tau.rational_value(), delta);
            if (!ok)
                merge(acc, verdict(Outcome::Contradiction, "positivity-arg",
                                   "arg((rho + i sqrt(-Delta))(tau + i sqrt(-Delta))^n) > pi: "
                                   "the degree-n positivity value is negative"));
            else
                merge(acc, inconclusive("positivity-arg", "degree-n positivity holds at rho"));
        }
    }
    if (in.data.mu && (in.semistable_assumed.has_value() || in.rho)) {
        try {
            merge(acc, nssemistable_criterion(in));
        } catch (const std::invalid_argument&) {
            // context missing; skip
        }
    }
    return acc;
}

}  // namespace fanob
