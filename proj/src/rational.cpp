#include "fanob/rational.hpp"

namespace fanob {

Int floor_int(const Rational& q) {
    Int n = num(q), d = den(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

Int ceil_int(const Rational& q) { return -floor_int(-q); }

Rational rat_pow(const Rational& q, unsigned e) {
    using boost::multiprecision::pow;
    return Rational(pow(num(q), e), pow(den(q), e));
}

Int isqrt_floor(const Int& z) {
    if (z < 0) throw std::domain_error("isqrt_floor: negative argument");
    return boost::multiprecision::sqrt(z);
}

bool is_perfect_square(const Rational& q, Rational* root) {
    if (q < 0) return false;
    Int sn = isqrt_floor(num(q));
    Int sd = isqrt_floor(den(q));
    if (sn * sn != num(q) || sd * sd != den(q)) return false;
    if (root) *root = Rational(sn, sd);
    return true;
}

std::string to_string(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view t) -> Int {
        if (t.empty()) throw std::invalid_argument("parse_rational: empty integer");
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("parse_rational: sign without digits");
        for (size_t k = i; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9')
                throw std::invalid_argument("parse_rational: invalid character");
        return Int(std::string(t));
    };
    size_t slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Int n = parse_int(text.substr(0, slash));
    Int d = parse_int(text.substr(slash + 1));
    if (d == 0) throw std::invalid_argument("parse_rational: zero denominator");
    return Rational(n, d);
}

RatInterval sqrt_enclosure(const Rational& d, unsigned precision_bits) {
    if (d < 0) throw std::domain_error("sqrt_enclosure: negative radicand");
    if (d == 0) return {Rational(0), Rational(0)};
    Rational root;
    if (is_perfect_square(d, &root)) return {root, root};
    // sqrt(p/q) = sqrt(p*4^k/q) / 2^k; the floor integer root gives a
    // dyadic bracket of width 2^-k.
    Int scaled = (num(d) << (2 * precision_bits)) / den(d);
    Int m = isqrt_floor(scaled);
    Int two_k = Int(1) << precision_bits;
    return {Rational(m, two_k), Rational(m + 1, two_k)};
}

}  // namespace fanob
