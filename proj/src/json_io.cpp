#include "lcylab/json_io.hpp"

namespace lcylab::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw SchemaError(std::string("\"") + key + "\" must be an array");
  return a;
}

}  // namespace

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    try {
      return Integer(j.get<std::string>(), 10);
    } catch (const std::invalid_argument&) {
    }
  }
  throw SchemaError("expected an integer, got " + j.dump());
}

json ray_to_json(const fan2d::RayVector& v) {
  return json::array({integer_to_json(v.x()), integer_to_json(v.y())});
}

json fan_to_json(const fan2d::Fan2D& fan) {
  json rays = json::array();
  for (const auto& v : fan.rays()) rays.push_back(ray_to_json(v));
  return {{"rays", rays}};
}

fan2d::Fan2D fan_from_json(const json& j) {
  std::vector<std::pair<Integer, Integer>> rays;
  for (const auto& r : array_field(j, "rays")) {
    if (!r.is_array() || r.size() != 2) throw SchemaError("each ray must be [x, y]");
    rays.emplace_back(integer_from_json(r[0]), integer_from_json(r[1]));
  }
  return fan2d::make_fan(rays);
}

json profile_to_json(const fan2d::SelfIntersectionProfile& profile) {
  json values = json::array();
  for (const auto& q : profile.values) values.push_back(to_string(q));
  return {{"selfints", values}};
}

json split_to_json(const fan2d::FibrationSplit& split) {
  return {{"over_zero", split.over_zero},
          {"over_infinity", split.over_infinity},
          {"horizontal", split.horizontal}};
}

json cycle_to_json(const cycles::CurveCycle& cycle) { return {{"selfints", cycle.selfints()}}; }

cycles::CurveCycle cycle_from_json(const json& j) {
  std::vector<cycles::Entry> entries;
  for (const auto& e : array_field(j, "selfints")) {
    if (!e.is_number_integer()) throw SchemaError("selfints must be integers");
    entries.push_back(e.get<cycles::Entry>());
  }
  return cycles::CurveCycle(std::move(entries));
}

json lemma_report_to_json(const cycles::LemmaReport& report) {
  json per_length = json::object();
  json sizes = json::object();
  for (const auto& [k, m] : report.per_length) per_length[std::to_string(k)] = m;
  for (const auto& [k, lr] : report.family_sizes)
    sizes[std::to_string(k)] = {{"left", lr.first}, {"right", lr.second}};
  json witness = nullptr;
  if (report.witness)
    witness = {{"left", report.witness->left.selfints()},
               {"right", report.witness->right.selfints()},
               {"mismatch", report.witness->alignment.mismatch},
               {"rotation", report.witness->alignment.rotation},
               {"reflected", report.witness->alignment.reflected}};
  return {{"ok", report.ok},
          {"seed", {report.b1, report.b2, report.b3}},
          {"per_length", per_length},
          {"family_sizes", sizes},
          {"witness", witness},
          {"bounds", {{"max_len", report.max_len}, {"n_max", report.n_max}}}};
}

json poly_to_json(const poly::MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exp", e}, {"coef", to_string(c)}});
  return {{"vars", p.variables()}, {"terms", terms}};
}

poly::MultiPoly poly_from_json(const json& j) {
  std::vector<std::string> vars;
  for (const auto& v : array_field(j, "vars")) {
    if (!v.is_string()) throw SchemaError("vars must be strings");
    vars.push_back(v.get<std::string>());
  }
  poly::MultiPoly p(vars);
  for (const auto& t : array_field(j, "terms")) {
    poly::Exponent e;
    for (const auto& x : array_field(t, "exp")) {
      if (!x.is_number_unsigned()) throw SchemaError("exponents must be nonnegative integers");
      e.push_back(x.get<unsigned long>());
    }
    const json& coef = field(t, "coef");
    if (!coef.is_string() && !coef.is_number_integer())
      throw SchemaError("coef must be an \"a/b\" string or an integer");
    Rational c = coef.is_string() ? parse_rational(coef.get<std::string>())
                                  : Rational(coef.get<long>());
    p.add_term(e, c);
  }
  return p;
}

json descriptor_to_json(const lcverify::QuarticCaseDescriptor& d) {
  json j = {{"components", d.component_degrees}, {"has_mult3_point", d.has_mult3_point}};
  if (d.reducible)
    j["reducible"] = {{"cubic_smooth_along_plane", d.reducible->cubic_smooth_along_plane},
                      {"plane_cubic_intersection_nodal",
                       d.reducible->plane_cubic_intersection_nodal}};
  if (d.irreducible) j["irreducible"] = {{"nodal_locus", to_string(d.irreducible->nodal_locus)}};
  return j;
}

lcverify::QuarticCaseDescriptor descriptor_from_json(const json& j) {
  lcverify::QuarticCaseDescriptor d;
  for (const auto& c : array_field(j, "components")) {
    if (!c.is_number_integer()) throw SchemaError("components must be integers");
    d.component_degrees.push_back(c.get<int>());
  }
  auto flag = [](const json& obj, const char* key, bool fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj.at(key).is_boolean()) throw SchemaError(std::string(key) + " must be boolean");
    return obj.at(key).get<bool>();
  };
  d.has_mult3_point = flag(j, "has_mult3_point", false);
  if (j.contains("reducible")) {
    const json& r = j.at("reducible");
    if (!r.is_object()) throw SchemaError("reducible must be an object");
    d.reducible = lcverify::ReducibleDetail{flag(r, "cubic_smooth_along_plane", false),
                                            flag(r, "plane_cubic_intersection_nodal", true)};
  }
  if (j.contains("irreducible")) {
    const json& locus = field(j.at("irreducible"), "nodal_locus");
    if (!locus.is_string()) throw SchemaError("nodal_locus must be a string");
    try {
      d.irreducible =
          lcverify::IrreducibleDetail{lcverify::parse_nodal_locus(locus.get<std::string>())};
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
  }
  return d;
}

json verdict_to_json(const lcverify::Verdict& v) {
  json j = {{"verdict", to_string(v.value)}, {"justification", v.justification}};
  if (const auto* c = lcverify::find_citation(v.justification)) j["statement"] = c->statement;
  return j;
}

json lemma41_to_json(const lcverify::Lemma41Result& r) {
  return {{"rho0", ray_to_json(r.rho0)},
          {"refined", fan_to_json(r.refined)},
          {"split", split_to_json(r.split)},
          {"index_map", r.index_map}};
}

json report_to_json(const lcverify::VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(
        {{"name", c.name}, {"status", c.passed ? "pass" : "fail"}, {"detail", c.detail}});
  return {{"example_id", report.example_id},
          {"checks", checks},
          {"notes", report.notes},
          {"overall", report.overall()}};
}

}  // namespace lcylab::json_io
