#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "atq/catalog.hpp"
#include "atq/diagram.hpp"
#include "atq/quantize.hpp"

namespace atq {

// Rationals travel as strings ("7", "-3/2"); integers are also accepted on
// input. Points are two-element arrays. Objects serialize with sorted keys,
// so print is canonical and parse(print(x)) == x bit for bit.

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json point_to_json(const RatPoint& p);
RatPoint point_from_json(const nlohmann::json& j);

nlohmann::json polygon_to_json(const RatPolygon& poly);
RatPolygon polygon_from_json(const nlohmann::json& j);

// Nodes are serialized sorted by position (then anchor), lexicographically.
nlohmann::json diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const nlohmann::json& j);

nlohmann::json closed_base_to_json(const ClosedBase& c);
ClosedBase closed_base_from_json(const nlohmann::json& j);

nlohmann::json graded_to_json(const GradedQuant& g);
GradedQuant graded_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const QuantReport& r);

nlohmann::json semitoric_to_json(const SemitoricModel& m);
SemitoricModel semitoric_from_json(const nlohmann::json& j);

nlohmann::json violations_to_json(const std::vector<Violation>& v);

// Two-space indent plus trailing newline; the single output format.
std::string dump_canonical(const nlohmann::json& j);

}  // namespace atq
