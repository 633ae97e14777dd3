#include "fanob/picard.hpp"

namespace fanob {

Int intersect(const CurveClass& a, const CurveClass& b) {
    if (a.k() != b.k()) throw std::invalid_argument("intersect: mismatched point counts");
    Int v = a.deg * b.deg;
    for (size_t i = 0; i < a.k(); ++i) v -= a.mults[i] * b.mults[i];
    return v;
}

Int self_intersection(const CurveClass& c) { return intersect(c, c); }

CurveClass cremona(const CurveClass& c, size_t i, size_t j, size_t l) {
    size_t k = c.k();
    if (i < 1 || j < 1 || l < 1 || i > k || j > k || l > k || i == j || j == l || i == l)
        throw std::invalid_argument("cremona: indices must be distinct and within 1..k");
    const Int &mi = c.mults[i - 1], &mj = c.mults[j - 1], &ml = c.mults[l - 1];
    CurveClass out = c;
    out.deg = 2 * c.deg - mi - mj - ml;
    out.mults[i - 1] = c.deg - mj - ml;
    out.mults[j - 1] = c.deg - mi - ml;
    out.mults[l - 1] = c.deg - mi - mj;
    return out;
}

Rational tau_schwarzenberger(const CurveClass& c) {
    if (c.deg <= 0) throw std::domain_error("tau_schwarzenberger: deg must be positive");
    Int s = 0;
    for (const Int& m : c.mults) s += m;
    return Rational(2 * s, c.deg);
}

std::vector<CurveClass> ell_sequence(unsigned n_max) {
    CurveClass ell{Int(1), std::vector<Int>(9, Int(0))};
    ell.mults[7] = 1;  // the line through the 8th and 9th points
    ell.mults[8] = 1;
    std::vector<CurveClass> out{ell};
    for (unsigned n = 0; n < n_max; ++n) {
        ell = cremona(ell, 1, 2, 3);
        ell = cremona(ell, 4, 5, 6);
        ell = cremona(ell, 7, 8, 9);
        out.push_back(ell);
    }
    return out;
}

Rational ell_tau_closed_form(unsigned n) {
    long long sign = (n % 2 == 0) ? 1 : -1;
    Int denom = Int(sign) + Int(18) * n * n + Int(24) * n + 7;
    return Rational(6) - Rational(16) / Rational(denom);
}

NagataBound nagata_bound(long long k) {
    if (k < 9) throw std::domain_error("nagata_bound: valid only for k >= 9");
    QuadNumber b(0, 2, Rational(k));
    if (b.is_rational())
        return {b, true, "exact: sqrt(k) is an integer"};
    return {b, false, "proved lower bound; conjecturally exact for very general points"};
}

}  // namespace fanob
