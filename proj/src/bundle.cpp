#include "fanob/bundle.hpp"

namespace fanob {

void BundleData::validate() const {
    if (n < 1) throw std::invalid_argument("BundleData: n must be positive");
    if (i_x < 1 || i_x > n + 1)
        throw std::invalid_argument("BundleData: index must satisfy 1 <= i_X <= n+1");
    if (d <= 0) throw std::invalid_argument("BundleData: d must be positive");
    if (d_x <= 0) throw std::invalid_argument("BundleData: d_X must be positive");
    if (!raw_c1_allowed && c1 != 0 && c1 != -1)
        throw std::invalid_argument("BundleData: c1 must be 0 or -1 unless raw_c1_allowed");
    if (mu && *mu <= 0) throw std::invalid_argument("BundleData: mu must be positive");
}

BundleData BundleData::checked(BundleData d) {
    d.validate();
    return d;
}

std::pair<BundleData, long long> BundleData::from_raw(unsigned n, unsigned i_x, long long d,
                                                      long long d_x, long long c1_raw,
                                                      long long c2_raw) {
    long long c1n = (c1_raw % 2 == 0) ? 0 : -1;
    long long k = (c1n - c1_raw) / 2;
    BundleData out;
    out.n = n;
    out.i_x = i_x;
    out.d = d;
    out.d_x = d_x;
    out.c1 = c1n;
    out.c2 = c2_raw + d * k * c1_raw + d * k * k;
    out.validate();
    return {out, k};
}

Rational discriminant(const BundleData& data) {
    return Rational(data.c1) * data.c1 - Rational(4 * data.c2, data.d);
}

Rational tau_of_splitting_type(const SplittingType& st) {
    if (st.h_degree <= 0)
        throw std::invalid_argument("tau_of_splitting_type: h_degree must be positive");
    long long diff = st.b >= st.a ? st.b - st.a : st.a - st.b;
    return Rational(diff, st.h_degree);
}

Rational tau_of_split_bundle(long long a, long long b) {
    return Rational(b >= a ? b - a : a - b);
}

bool is_fano(const QuadNumber& tau, unsigned i_x) {
    return quad_sign(tau - QuadNumber(Rational(i_x))) < 0;
}

}  // namespace fanob
