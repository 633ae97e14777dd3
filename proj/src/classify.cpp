#include "fanob/classify.hpp"

#include <algorithm>

namespace fanob {

ContractionSpec ContractionSpec::make(ContractionKind kind, long long h_dot_c) {
    if (h_dot_c < 1) throw std::invalid_argument("ContractionSpec: H.C must be positive");
    return {kind, kind == ContractionKind::P1Bundle ? 2 : 1, h_dot_c};
}

Rational tau_from_contraction(const ContractionSpec& spec, long long i_x) {
    return Rational(i_x) - Rational(spec.length, spec.h_dot_c);
}

namespace {

long long rhs_for_dim(unsigned n) {
    switch (n) {
        case 2: return 1;
        case 3: return 2;
        case 5: return 3;
        default:
            throw std::invalid_argument(
                "structure_equation_solutions: only n = 2, 3, 5 admit the two-bundle structure");
    }
}

}  // namespace

std::vector<StructureSolution> structure_equation_solutions(unsigned n, const EnumerationFilters& filters) {
    long long rhs = rhs_for_dim(n);
    std::vector<StructureSolution> out;
    // (i_X mu - 2)(i_Y mu - 2) = rhs with both factors positive bounds
    // i mu <= rhs + 2; without the positivity filter, factors of -rhs down
    // to -(rhs+2) still keep the search box tiny.
    long long bound = rhs + 4;
    for (long long mu = 1; mu <= bound; ++mu)
        for (long long ix = 1; ix <= bound; ++ix)
            for (long long iy = 1; iy <= bound; ++iy) {
                long long f1 = ix * mu - 2, f2 = iy * mu - 2;
                if (f1 * f2 != rhs) continue;
                if (filters.positive_slopes && (f1 <= 0 || f2 <= 0)) continue;
                if (filters.ko_bound &&
                    (ix > static_cast<long long>(n) + 1 || iy > static_cast<long long>(n) + 1))
                    continue;
                if (filters.plane_only_in_dim2 && n == 2 && (ix != 3 || iy != 3)) continue;
                if (filters.canonical_orientation && ix < iy) continue;
                out.push_back({ix, iy, mu});
            }
    std::sort(out.begin(), out.end(), [](const StructureSolution& a, const StructureSolution& b) {
        return std::tie(a.mu, a.i_x, a.i_y) < std::tie(b.mu, b.i_x, b.i_y);
    });
    return out;
}

namespace {

std::string row_label(unsigned n, long long i_x) {
    if (n == 2 && i_x == 3) return "P^2, tangent bundle";
    if (n == 3 && i_x == 4) return "P^3, null-correlation bundle (partner Q^3, spinor)";
    if (n == 5 && i_x == 5) return "Q^5, Cayley bundle (partner K(G2), quotient restriction)";
    return "";
}

}  // namespace

ClassificationRow derive_row(unsigned n, long long i_x, long long i_y, long long mu,
                             long long d) {
    if (mu < 1) throw std::invalid_argument("derive_row: mu must be positive");
    if (d < 1) throw std::invalid_argument("derive_row: d must be positive");
    Rational tan2 = tan2_pi_over(n + 1).value;  // rational exactly for n = 2, 3, 5
    if (!tan2_pi_over(n + 1).is_rational)
        throw std::invalid_argument("derive_row: n must be 2, 3 or 5");
    Rational tau = Rational(i_x) - Rational(2, mu);
    if (tau <= 0)
        throw std::domain_error("derive_row: tau = " + to_string(tau) +
                                " is not positive; configuration impossible");
    Rational delta = -tau * tau * tan2;
    long long c1 = (i_x % 2 == 0) ? 0 : -1;  // parity: i_X - c1 even, normalized
    Rational c2r = Rational(d) * (Rational(c1) * c1 - delta) / 4;
    if (!is_integer(c2r) || c2r <= 0)
        throw std::domain_error("derive_row: c2 = " + to_string(c2r) +
                                " is not a positive integer; configuration impossible");
    ClassificationRow row;
    row.n = n;
    row.i_x = i_x;
    row.i_y = i_y;
    row.d = d;
    row.mu = mu;
    row.tau = tau;
    row.delta = delta;
    row.c1 = c1;
    row.c2 = static_cast<long long>(num(c2r));
    row.label = row_label(n, i_x);
    return row;
}

std::vector<ClassificationRow> classification_table(const std::vector<unsigned>& dims,
                                                    long long d,
                                                    const EnumerationFilters& filters) {
    std::vector<ClassificationRow> rows;
    for (unsigned n : dims)
        for (const auto& sol : structure_equation_solutions(n, filters))
            rows.push_back(derive_row(n, sol.i_x, sol.i_y, sol.mu, d));
    return rows;
}

Rational degree_ratio_value(const Rational& tau_mu, unsigned n) {
    // (2 cos(pi/(n+1)))^2 = 1, 2, 3 for n = 2, 3, 5; the exponent n-1 is
    // even for n = 3, 5, and for n = 2 the cosine factor is exactly 1.
    switch (n) {
        case 2: return tau_mu;
        case 3: return tau_mu * tau_mu / 2;
        case 5: return rat_pow(tau_mu, 4) / 9;
        default: throw std::invalid_argument("degree_ratio: n must be 2, 3 or 5");
    }
}

Rational degree_ratio(const ClassificationRow& row) {
    return degree_ratio_value(row.tau * Rational(row.mu), row.n);
}

ConicExclusionReport conic_exclusion_check(unsigned n, long long i_x, long long i_y,
                                           long long mu_prime) {
    Rational tan2 = tan2_pi_over(n + 1).value;
    ConicExclusionReport r;
    r.n = n;
    r.i_x = i_x;
    r.i_y = i_y;
    r.mu_prime = mu_prime;
    // the base-change determinant is +-2 exactly when the contraction is
    // not already a P^1-bundle, forcing mu = 2 mu'
    r.nu = 2 * i_x * mu_prime - 2;
    r.nu_prime = i_y * mu_prime - 2;
    r.target = Rational(4) / (Rational(1) + tan2);
    r.product_ok = (Rational(r.nu * r.nu_prime) == r.target);
    r.parity_excluded = false;
    r.survivor = false;
    r.degree_contradiction = false;
    r.trace.push_back("nu = 2 i_X mu' - 2 = " + std::to_string(r.nu) + ", nu' = i_Y mu' - 2 = " +
                      std::to_string(r.nu_prime) + ", required product 4/(1+tan^2(pi/(n+1))) = " +
                      to_string(r.target));
    if (!r.product_ok) {
        // nu is even by construction; an odd target is unreachable outright
        if (is_integer(r.target) && num(r.target) % 2 == 1) {
            r.parity_excluded = true;
            r.trace.push_back("nu = 2(i_X mu' - 1) is even, so nu*nu' cannot equal the odd "
                              "target " + to_string(r.target));
        } else {
            r.trace.push_back("product mismatch: nu*nu' = " + std::to_string(r.nu * r.nu_prime));
        }
        return r;
    }
    r.survivor = true;
    r.trace.push_back("survivor of the product and parity tests");
    // For the survivor (n=3, i_X=2, i_Y=3, mu'=1): -K = K' + H', H = -K' + H'
    // and the reduction relation becomes K'^2 = -H'^2. Verify through the
    // ring that (K' + H')(-K' + H')^3 = -4 K' H'^3 and draw the degree
    // contradiction.
    if (n == 3 && i_x == 2 && i_y == 3 && mu_prime == 1) {
        Rational dprime(-1);
        RingClass kp = RingClass::k_class(3, dprime);
        RingClass hp = RingClass::h_power(3, dprime, 1);
        RingClass lhs = (kp + hp) * (kp * Rational(-1) + hp).pow(3);
        RingClass expect(3, dprime);
        expect.set_coeff(3, Rational(0), Rational(-4));
        if (lhs == expect) {
            r.degree_contradiction = true;
            r.trace.push_back("with K'^2 = -H'^2: (K'+H')(-K'+H')^3 = -4 K' H'^3");
            r.trace.push_back("pairing -K.H^3 = 2 deg(X) against -4 K'.H'^3 = 8 deg(Y) forces "
                              "deg(X) = 4 deg(Y) = 8");
            r.trace.push_back("an index-2 del Pezzo threefold has degree at most 7: "
                              "contradiction, no smooth conic bundle exists");
        } else {
            r.trace.push_back("ring verification failed unexpectedly");
        }
    }
    return r;
}

PbundleEquivalenceReport check_pbundle_equivalence(const BundleData& data, const Rational& tau) {
    if (!(tau < Rational(data.i_x)))
        throw std::domain_error("check_pbundle_equivalence: tau >= i_X is not a Fano bundle");
    PbundleEquivalenceReport rep;
    rep.parity_even = ((data.i_x - data.c1) % 2 == 0);
    rep.tau_below_ix_minus_1 = (tau < Rational(data.i_x) - 1);
    rep.table_member = false;
    if (data.n == 2 || data.n == 3 || data.n == 5) {
        for (const auto& sol : structure_equation_solutions(data.n)) {
            try {
                ClassificationRow row = derive_row(data.n, sol.i_x, sol.i_y, sol.mu, data.d);
                if (row.i_x == static_cast<long long>(data.i_x) && row.c1 == data.c1 &&
                    row.c2 == data.c2 && row.tau == tau)
                    rep.table_member = true;
            } catch (const std::domain_error&) {
                // impossible configuration for this d; not a member
            }
        }
    }
    bool two_three = (rep.parity_even == rep.tau_below_ix_minus_1);
    bool one_implies = !rep.table_member || (rep.parity_even && rep.tau_below_ix_minus_1);
    rep.consistent = two_three && one_implies;
    if (!rep.consistent) {
        rep.note = "mismatch: membership=" + std::string(rep.table_member ? "yes" : "no") +
                   " parity_even=" + (rep.parity_even ? "yes" : "no") +
                   " tau<i_X-1=" + (rep.tau_below_ix_minus_1 ? "yes" : "no");
    } else {
        rep.note = "all three characterizations agree";
    }
    return rep;
}

}  // namespace fanob
