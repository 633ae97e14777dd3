#pragma once

#include "fanob/quad.hpp"

#include <vector>

namespace fanob {

/// A divisor class deg * H - sum_i m_i * E_i on the plane blown up at k
/// points; effective curves through the points carry positive m_i. The
/// intersection form is deg1*deg2 - sum m1_i * m2_i.
struct CurveClass {
    Int deg;
    std::vector<Int> mults;

    size_t k() const { return mults.size(); }
    bool operator==(const CurveClass&) const = default;
};

Int intersect(const CurveClass& a, const CurveClass& b);

/// Self-intersection deg^2 - sum m_i^2.
Int self_intersection(const CurveClass& c);

/// The quadratic transformation based at points i, j, l (1-based,
/// distinct): deg' = 2 deg - m_i - m_j - m_l and m_i' = deg - m_j - m_l
/// cyclically; the other multiplicities are untouched. A lattice
/// involution fixing the canonical class (-3; -1, ..., -1).
CurveClass cremona(const CurveClass& c, size_t i, size_t j, size_t l);

/// Nef slope contribution of an irreducible class for the k-point
/// extension bundle: tau(C) = 2 (sum m_i) / deg. (Its reciprocal, times 2,
/// is the Seshadri ratio of the hyperplane against the point set.)
Rational tau_schwarzenberger(const CurveClass& c);

/// The orbit l_0, l_1, ..., l_nmax of the line through the last two of 9
/// points under the composite of the quadratic transformations based at
/// (1,2,3), then (4,5,6), then (7,8,9), applied in that order.
std::vector<CurveClass> ell_sequence(unsigned n_max);

/// tau(l_n) = 6 - 16/((-1)^n + 18 n^2 + 24 n + 7), the closed form the
/// orbit realizes.
Rational ell_tau_closed_form(unsigned n);

/// The k-point lower bound tau >= 2 sqrt(k) for k >= 9; exact when k is a
/// perfect square, conjecturally exact (for very general points) otherwise.
struct NagataBound {
    QuadNumber bound;
    bool exact;       // proved equality (k a perfect square)
    std::string note;
};

NagataBound nagata_bound(long long k);

}  // namespace fanob
