#pragma once

#include "fanob/classify.hpp"
#include "fanob/hartshorne.hpp"
#include "fanob/picard.hpp"
#include "fanob/ring.hpp"

#include <json.hpp>

namespace fanob {

// ordered_json keeps emission byte-deterministic.
using json = nlohmann::ordered_json;

// Exact values travel as strings ("p/q" or "p"), never as floats.
json rational_to_json(const Rational& q);
Rational rational_from_json(const json& j);

json int_to_json(const Int& z);
Int int_from_json(const json& j);

json quad_to_json(const QuadNumber& q);
QuadNumber quad_from_json(const json& j);

/// Non-authoritative decimal rendering for --approx output.
double quad_to_double(const QuadNumber& q);

json bundle_to_json(const BundleData& b);
BundleData bundle_from_json(const json& j);

/// BundleData keys plus optional "beta" and "semistable_assumed"; "tau" is
/// required here since the criteria need it.
CriterionInput criterion_input_from_json(const json& j);

json verdict_to_json(const Verdict& v);

json row_to_json(const ClassificationRow& r);

json curve_to_json(const CurveClass& c);

json ring_to_json(const RingClass& r);
RingClass ring_from_json(const json& j);

json conic_report_to_json(const ConicExclusionReport& r);

}  // namespace fanob
