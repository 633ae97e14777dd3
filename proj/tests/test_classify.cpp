#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fanob/classify.hpp"
#include "fanob/slope.hpp"

using namespace fanob;

TEST_CASE("tau from contraction type") {
    auto p1 = ContractionSpec::make(ContractionKind::P1Bundle, 1);
    CHECK(p1.length == 2);
    CHECK(tau_from_contraction(p1, 3) == 1);

    auto blow = ContractionSpec::make(ContractionKind::BlowUpCodim2, 1);
    CHECK(blow.length == 1);
    CHECK(tau_from_contraction(blow, 3) == 2);

    auto p1b = ContractionSpec::make(ContractionKind::P1Bundle, 2);
    CHECK(tau_from_contraction(p1b, 2) == 1);

    auto conic = ContractionSpec::make(ContractionKind::ConicBundleReducible, 2);
    CHECK(tau_from_contraction(conic, 3) == Rational(5, 2));

    CHECK_THROWS_AS(ContractionSpec::make(ContractionKind::P1Bundle, 0), std::invalid_argument);
}

TEST_CASE("structure_equation_solutions") {
    CHECK(structure_equation_solutions(2) == std::vector<StructureSolution>{{3, 3, 1}});
    CHECK(structure_equation_solutions(3) == std::vector<StructureSolution>{{4, 3, 1}});
    CHECK(structure_equation_solutions(5) == std::vector<StructureSolution>{{5, 3, 1}});
    CHECK_THROWS_AS(structure_equation_solutions(4), std::invalid_argument);

    // raw n = 2 solutions also include the (1,1,3) branch removed by the
    // plane-only filter
    EnumerationFilters raw;
    raw.plane_only_in_dim2 = false;
    auto sols = structure_equation_solutions(2, raw);
    CHECK(sols.size() == 2);
    CHECK(std::count(sols.begin(), sols.end(), StructureSolution{1, 1, 3}) == 1);
}

TEST_CASE("derive_row reproduces the three rows") {
    ClassificationRow r2 = derive_row(2, 3, 3, 1, 1);
    CHECK(r2.tau == 1);
    CHECK(r2.delta == -3);
    CHECK(r2.c1 == -1);
    CHECK(r2.c2 == 1);

    ClassificationRow r3 = derive_row(3, 4, 3, 1, 1);
    CHECK(r3.tau == 2);
    CHECK(r3.delta == -4);
    CHECK(r3.c1 == 0);
    CHECK(r3.c2 == 1);

    ClassificationRow r5 = derive_row(5, 5, 3, 1, 1);
    CHECK(r5.tau == 3);
    CHECK(r5.delta == -3);
    CHECK(r5.c1 == -1);
    CHECK(r5.c2 == 1);

    // d that breaks integrality of c2 is rejected: n=3 row with d=3 gives
    // c2 = 3 (fine), but the swapped n=3 orientation with d=1 gives 1/2
    CHECK_THROWS_AS(derive_row(3, 3, 4, 1, 1), std::domain_error);
}

TEST_CASE("classification_table") {
    auto rows = classification_table({2, 3, 5});
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].n == 2);
    CHECK(rows[1].n == 3);
    CHECK(rows[2].n == 5);
    for (const auto& r : rows) CHECK_FALSE(r.label.empty());
}

TEST_CASE("degree ratios") {
    auto rows = classification_table({2, 3, 5});
    CHECK(degree_ratio(rows[0]) == 1);
    CHECK(degree_ratio(rows[1]) == 2);
    CHECK(degree_ratio(rows[2]) == 9);
}

TEST_CASE("degree ratio swap product is 1") {
    for (const auto& row : classification_table({2, 3, 5})) {
        Rational tau_prime = Rational(row.i_y) - Rational(2, row.mu);
        Rational swapped = degree_ratio_value(tau_prime * Rational(row.mu), row.n);
        CHECK(degree_ratio(row) * swapped == 1);
    }
}

TEST_CASE("table rows satisfy the boundary identities") {
    for (const auto& row : classification_table({2, 3, 5})) {
        // right-hand equality in the slope gap: 4 c2 / d = c1^2 + tau^2 tan^2
        Rational tan2 = tan2_pi_over(row.n + 1).value;
        CHECK(Rational(4 * row.c2, row.d) == Rational(row.c1) * row.c1 + row.tau * row.tau * tan2);
        // the fiber-type boundary: arg((tau + i sqrt(-Delta))^(n+1)) = pi
        CHECK(check_arg_eq_pi(row.n, row.tau, row.tau, row.delta));
        // parity
        CHECK((row.i_x - row.c1) % 2 == 0);
        // the divisorial solve lands exactly on rho = tau
        CHECK(solve_divisorial_rho(row.n, row.tau, row.delta) == QuadNumber(row.tau));
    }
}

TEST_CASE("conic exclusion examples") {
    auto survivor = conic_exclusion_check(3, 2, 3, 1);
    CHECK(survivor.product_ok);
    CHECK(survivor.survivor);
    CHECK(survivor.degree_contradiction);
    CHECK(survivor.nu == 2);
    CHECK(survivor.nu_prime == 1);
    CHECK(survivor.target == 2);

    // n = 2: nu even makes the odd target 1 unreachable
    auto parity = conic_exclusion_check(2, 3, 3, 1);
    CHECK_FALSE(parity.product_ok);
    CHECK(parity.parity_excluded);

    // n = 5 with nu = 0
    auto zero = conic_exclusion_check(5, 1, 1, 1);
    CHECK_FALSE(zero.product_ok);
    CHECK_FALSE(zero.survivor);
}

TEST_CASE("conic exclusion sweep finds exactly one survivor") {
    int survivors = 0;
    for (unsigned n : {2u, 3u, 5u})
        for (long long ix = 1; ix <= n + 1; ++ix)
            for (long long iy = 1; iy <= n + 1; ++iy)
                for (long long mp = 1; mp <= 4; ++mp) {
                    auto rep = conic_exclusion_check(n, ix, iy, mp);
                    if (rep.survivor) {
                        ++survivors;
                        CHECK(rep.n == 3);
                        CHECK(rep.i_x == 2);
                        CHECK(rep.i_y == 3);
                        CHECK(rep.mu_prime == 1);
                        CHECK(rep.degree_contradiction);
                    }
                }
    CHECK(survivors == 1);
}

TEST_CASE("pbundle equivalence report") {
    BundleData row3;
    row3.n = 3;
    row3.i_x = 4;
    row3.d = 1;
    row3.d_x = 1;
    row3.c1 = 0;
    row3.c2 = 1;
    auto rep = check_pbundle_equivalence(row3, Rational(2));
    CHECK(rep.table_member);
    CHECK(rep.parity_even);
    CHECK(rep.tau_below_ix_minus_1);
    CHECK(rep.consistent);

    BundleData neg;
    neg.n = 2;
    neg.i_x = 3;
    neg.d = 1;
    neg.d_x = 1;
    neg.c1 = 0;
    neg.c2 = 1;
    auto rep2 = check_pbundle_equivalence(neg, Rational(2));
    CHECK_FALSE(rep2.table_member);
    CHECK_FALSE(rep2.parity_even);
    CHECK_FALSE(rep2.tau_below_ix_minus_1);
    CHECK(rep2.consistent);

    BundleData hm;
    hm.n = 4;
    hm.i_x = 5;
    hm.d = 1;
    hm.d_x = 1;
    hm.c1 = -1;
    hm.c2 = 10;
    CHECK_THROWS_AS(check_pbundle_equivalence(hm, Rational(7)), std::domain_error);
}

TEST_CASE("rows pass the stable-range checks") {
    for (const auto& row : classification_table({2, 3, 5})) {
        BundleData b;
        b.n = row.n;
        b.i_x = static_cast<unsigned>(row.i_x);
        b.d = row.d;
        b.d_x = 1;
        b.c1 = row.c1;
        b.c2 = row.c2;
        b.mu = row.mu;
        REQUIRE(discriminant(b) == row.delta);
        CHECK(check_slope_gap(b, QuadNumber(row.tau)));
        auto in = CriterionInput::make(b, QuadNumber(row.tau), QuadNumber(row.tau));
        CHECK(run_all(in).outcome == Outcome::Inconclusive);
    }
}
