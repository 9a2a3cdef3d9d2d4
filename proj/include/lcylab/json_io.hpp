#pragma once

// JSON forms of the domain values. Objects serialize with sorted keys and
// rationals as "a/b" strings, so equal values give identical bytes.

#include <json.hpp>

#include "lcylab/cycles.hpp"
#include "lcylab/fan2d.hpp"
#include "lcylab/lcverify.hpp"
#include "lcylab/poly.hpp"

namespace lcylab::json_io {

using nlohmann::json;

/// Thrown for well-formed JSON that does not match the expected schema.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error("schema: " + what) {}
};

json integer_to_json(const Integer& z);
Integer integer_from_json(const json& j);

// {"rays": [[x, y], ...]}
json fan_to_json(const fan2d::Fan2D& fan);
fan2d::Fan2D fan_from_json(const json& j);
// {"selfints": ["p/q", ...]}
json profile_to_json(const fan2d::SelfIntersectionProfile& profile);
json ray_to_json(const fan2d::RayVector& v);
json split_to_json(const fan2d::FibrationSplit& split);

// {"selfints": [int, ...]}
json cycle_to_json(const cycles::CurveCycle& cycle);
cycles::CurveCycle cycle_from_json(const json& j);
json lemma_report_to_json(const cycles::LemmaReport& report);

// {"vars": [...], "terms": [{"exp": [...], "coef": "a/b"}, ...]}
json poly_to_json(const poly::MultiPoly& p);
poly::MultiPoly poly_from_json(const json& j);

json descriptor_to_json(const lcverify::QuarticCaseDescriptor& d);
lcverify::QuarticCaseDescriptor descriptor_from_json(const json& j);
json verdict_to_json(const lcverify::Verdict& v);
json lemma41_to_json(const lcverify::Lemma41Result& r);
json report_to_json(const lcverify::VerificationReport& report);

}  // namespace lcylab::json_io
