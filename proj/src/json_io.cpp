#include "fanob/json_io.hpp"

#include <limits>

namespace fanob {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

long long require_ll(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        bad(std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<long long>();
}

}  // namespace

json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    bad("expected a rational as \"p/q\" string or integer");
}

json int_to_json(const Int& z) {
    if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
        return static_cast<long long>(z);
    return z.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        Rational q = parse_rational(j.get<std::string>());
        if (!is_integer(q)) bad("expected an integer");
        return num(q);
    }
    bad("expected an integer as number or string");
}

json quad_to_json(const QuadNumber& q) {
    return json{{"a", rational_to_json(q.a())},
                {"b", rational_to_json(q.b())},
                {"D", rational_to_json(q.radicand())}};
}

QuadNumber quad_from_json(const json& j) {
    if (j.is_object()) {
        if (!j.contains("a") || !j.contains("b") || !j.contains("D"))
            bad("quadratic number needs fields a, b, D");
        return QuadNumber(rational_from_json(j["a"]), rational_from_json(j["b"]),
                          rational_from_json(j["D"]));
    }
    return QuadNumber(rational_from_json(j));  // bare rationals are accepted
}

double quad_to_double(const QuadNumber& q) {
    RatInterval e = quad_enclosure(q, 64);
    Rational mid = (e.lo + e.hi) / 2;
    return static_cast<double>(num(mid)) / static_cast<double>(den(mid));
}

json bundle_to_json(const BundleData& b) {
    json j{{"n", b.n},   {"i_X", b.i_x}, {"d", b.d},
           {"d_X", b.d_x}, {"c1", b.c1},   {"c2", b.c2}};
    if (b.mu) j["mu"] = *b.mu;
    if (b.tau) j["tau"] = quad_to_json(*b.tau);
    if (b.rho) j["rho"] = quad_to_json(*b.rho);
    j["raw_c1_allowed"] = b.raw_c1_allowed;
    return j;
}

BundleData bundle_from_json(const json& j) {
    if (!j.is_object()) bad("bundle record must be an object");
    BundleData b;
    long long n = require_ll(j, "n");
    long long ix = require_ll(j, "i_X");
    if (n < 1 || ix < 1) bad("n and i_X must be positive");
    b.n = static_cast<unsigned>(n);
    b.i_x = static_cast<unsigned>(ix);
    b.d = require_ll(j, "d");
    b.d_x = require_ll(j, "d_X");
    b.c1 = require_ll(j, "c1");
    b.c2 = require_ll(j, "c2");
    if (j.contains("mu") && !j["mu"].is_null()) b.mu = require_ll(j, "mu");
    if (j.contains("tau") && !j["tau"].is_null()) b.tau = quad_from_json(j["tau"]);
    if (j.contains("rho") && !j["rho"].is_null()) b.rho = quad_from_json(j["rho"]);
    if (j.contains("raw_c1_allowed")) {
        if (!j["raw_c1_allowed"].is_boolean()) bad("raw_c1_allowed must be boolean");
        b.raw_c1_allowed = j["raw_c1_allowed"].get<bool>();
    }
    b.validate();
    return b;
}

CriterionInput criterion_input_from_json(const json& j) {
    BundleData b = bundle_from_json(j);
    if (!b.tau) bad("field \"tau\" is required for the splitting criteria");
    std::optional<long long> beta;
    if (j.contains("beta") && !j["beta"].is_null()) beta = require_ll(j, "beta");
    std::optional<bool> ss;
    if (j.contains("semistable_assumed") && !j["semistable_assumed"].is_null()) {
        if (!j["semistable_assumed"].is_boolean()) bad("semistable_assumed must be boolean");
        ss = j["semistable_assumed"].get<bool>();
    }
    return CriterionInput::make(b, *b.tau, b.rho, beta, ss);
}

json verdict_to_json(const Verdict& v) {
    json just = json::array();
    for (const auto& e : v.justification)
        just.push_back(json{{"criterion", e.criterion}, {"detail", e.detail}});
    return json{{"outcome", outcome_name(v.outcome)}, {"fired", v.fired},
                {"justification", just}};
}

json row_to_json(const ClassificationRow& r) {
    return json{{"n", r.n},
                {"i_X", r.i_x},
                {"i_Y", r.i_y},
                {"d", r.d},
                {"mu", r.mu},
                {"tau", rational_to_json(r.tau)},
                {"delta", rational_to_json(r.delta)},
                {"c1", r.c1},
                {"c2", r.c2},
                {"label", r.label}};
}

json curve_to_json(const CurveClass& c) {
    json mults = json::array();
    for (const Int& m : c.mults) mults.push_back(int_to_json(m));
    return json{{"deg", int_to_json(c.deg)}, {"mults", mults}};
}

json ring_to_json(const RingClass& r) {
    json coeffs = json::array();
    for (unsigned j = 0; j <= r.n() + 1; ++j)
        coeffs.push_back(json::array(
            {rational_to_json(r.coeff(j).first), rational_to_json(r.coeff(j).second)}));
    return json{{"n", r.n()}, {"delta", rational_to_json(r.delta())}, {"coeffs", coeffs}};
}

RingClass ring_from_json(const json& j) {
    long long n = require_ll(j, "n");
    if (n < 1) bad("ring n must be positive");
    if (!j.contains("delta")) bad("ring needs field delta");
    RingClass r(static_cast<unsigned>(n), rational_from_json(j["delta"]));
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) bad("ring needs coeffs array");
    const json& coeffs = j["coeffs"];
    if (coeffs.size() != static_cast<size_t>(n) + 2) bad("ring coeffs must have n+2 entries");
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (!coeffs[k].is_array() || coeffs[k].size() != 2) bad("each coeff must be a pair");
        r.set_coeff(static_cast<unsigned>(k), rational_from_json(coeffs[k][0]),
                    rational_from_json(coeffs[k][1]));
    }
    return r;
}

json conic_report_to_json(const ConicExclusionReport& r) {
    return json{{"n", r.n},
                {"i_X", r.i_x},
                {"i_Y", r.i_y},
                {"mu_prime", r.mu_prime},
                {"nu", r.nu},
                {"nu_prime", r.nu_prime},
                {"target", rational_to_json(r.target)},
                {"product_ok", r.product_ok},
                {"parity_excluded", r.parity_excluded},
                {"survivor", r.survivor},
                {"degree_contradiction", r.degree_contradiction},
                {"trace", r.trace}};
}

}  // namespace fanob
