#include <doctest.h>

#include <random>

#include "lcylab/json_io.hpp"
#include "lcylab/lcverify.hpp"

using namespace lcylab;
using namespace lcylab::lcverify;

namespace {

QuarticCaseDescriptor desc(std::vector<int> degrees, bool mult3 = false) {
  QuarticCaseDescriptor d;
  d.component_degrees = std::move(degrees);
  d.has_mult3_point = mult3;
  return d;
}

QuarticCaseDescriptor plane_cubic(bool smooth_along_plane, bool mult3 = false) {
  auto d = desc({1, 3}, mult3);
  d.reducible = ReducibleDetail{smooth_along_plane, true};
  return d;
}

QuarticCaseDescriptor irreducible(NodalLocus locus, bool mult3 = false) {
  auto d = desc({4}, mult3);
  d.irreducible = IrreducibleDetail{locus};
  return d;
}

}  // namespace

TEST_CASE("weighted_blowup_log_discrepancy") {
  const std::vector<std::string> xyz{"x", "y", "z"};
  CHECK(weighted_blowup_log_discrepancy(poly::parse_poly("x^2 + y^2 + z^2", xyz), {1, 1, 1}) ==
        1);
  CHECK(weighted_blowup_log_discrepancy(poly::parse_poly("x*y*z", xyz), {1, 1, 1}) == 0);
  CHECK(weighted_blowup_log_discrepancy(poly::parse_poly("x*y*z + x^4 + y^4 + z^4", xyz),
                                        {1, 1, 1}) == 0);
  CHECK(weighted_blowup_log_discrepancy(poly::parse_poly("x^2 + y^3 + z^6", xyz), {3, 2, 1}) ==
        0);
}

TEST_CASE("classifier decision table") {
  struct Row {
    QuarticCaseDescriptor d;
    VerdictValue value;
    const char* key;
  };
  const std::vector<Row> rows{
      {irreducible(NodalLocus::None, true), VerdictValue::ClusterType, "mult3-point"},
      {desc({1, 1, 1, 1}), VerdictValue::ClusterType, "three-components"},
      {desc({1, 1, 2}), VerdictValue::ClusterType, "three-components"},
      {desc({2, 2}), VerdictValue::ClusterType, "two-quadrics"},
      {plane_cubic(true), VerdictValue::NotClusterType, "plane-cubic-smooth"},
      {plane_cubic(false), VerdictValue::ClusterType, "plane-cubic-singular"},
      {irreducible(NodalLocus::TwistedCubic), VerdictValue::ClusterType, "nodal-locus-nonplanar"},
      {irreducible(NodalLocus::ThreeConcurrentLines), VerdictValue::ClusterType,
       "nodal-locus-nonplanar"},
      {irreducible(NodalLocus::PlaneConic), VerdictValue::Open, "nodal-locus-planar"},
      {irreducible(NodalLocus::Line), VerdictValue::Open, "nodal-locus-planar"},
      {irreducible(NodalLocus::None), VerdictValue::Open, "normal-no-triple-point"},
      {plane_cubic(false, true), VerdictValue::ClusterType, "mult3-point"},
  };
  for (const auto& row : rows) {
    const Verdict v = classify_quartic_pair(row.d);
    CHECK(v.value == row.value);
    CHECK(v.justification == row.key);
    CHECK(find_citation(v.justification) != nullptr);
  }
}

TEST_CASE("classifier rejects inconsistent descriptors") {
  CHECK_THROWS_AS(classify_quartic_pair(desc({})), DescriptorError);
  CHECK_THROWS_AS(classify_quartic_pair(desc({1, 2})), DescriptorError);
  CHECK_THROWS_AS(classify_quartic_pair(desc({0, 4})), DescriptorError);
  CHECK_THROWS_AS(classify_quartic_pair(desc({4})), DescriptorError);
  CHECK_THROWS_AS(classify_quartic_pair(desc({1, 3})), DescriptorError);
  CHECK_THROWS_AS(classify_quartic_pair(plane_cubic(true, true)), DescriptorError);
  auto both = irreducible(NodalLocus::Line);
  both.reducible = ReducibleDetail{};
  CHECK_THROWS_AS(classify_quartic_pair(both), DescriptorError);
  auto misplaced = desc({2, 2});
  misplaced.reducible = ReducibleDetail{};
  CHECK_THROWS_AS(classify_quartic_pair(misplaced), DescriptorError);
  auto non_nodal = plane_cubic(true);
  non_nodal.reducible->plane_cubic_intersection_nodal = false;
  CHECK_THROWS_AS(classify_quartic_pair(non_nodal), DescriptorError);
}

TEST_CASE("descriptor JSON round trip") {
  for (const auto& d : {plane_cubic(true), irreducible(NodalLocus::TwistedCubic, false),
                        desc({1, 1, 2})}) {
    const auto back = json_io::descriptor_from_json(json_io::descriptor_to_json(d));
    CHECK(back.component_degrees == d.component_degrees);
    CHECK(classify_quartic_pair(back).justification == classify_quartic_pair(d).justification);
  }
}

TEST_CASE("lemma41_construction on the plane") {
  const auto plane = fan2d::standard_fan(fan2d::StandardFan::plane());
  const auto r = lemma41_construction(plane, 0, 1);
  CHECK(r.rho0 == fan2d::RayVector(-1, 1));
  CHECK(r.refined.size() == 5);
  CHECK(r.split.horizontal.size() == 2);
  CHECK(r.split.over_zero.count(r.index_map[0]) == 1);
  CHECK(r.split.over_zero.count(r.index_map[1]) == 1);
}

TEST_CASE("lemma41_construction with the same ray twice") {
  const auto f2 = fan2d::standard_fan(fan2d::StandardFan::hirzebruch(2));
  const auto r = lemma41_construction(f2, 1, 1);
  CHECK(fan2d::det(f2.ray(1), r.rho0) > 0);
  CHECK(r.split.over_zero.count(r.index_map[1]) == 1);
  CHECK(r.split.horizontal.size() == 2);
}

TEST_CASE("lemma41_construction rejects opposite rays") {
  const auto f1 = fan2d::standard_fan(fan2d::StandardFan::hirzebruch(1));
  try {
    lemma41_construction(f1, 1, 3);
    FAIL("expected FanError");
  } catch (const fan2d::FanError& e) {
    CHECK(e.kind() == fan2d::FanErrorKind::OppositeRays);
  }
}

TEST_CASE("lemma41_construction on random smooth fans") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto fan = fan2d::standard_fan(fan2d::StandardFan::hirzebruch(static_cast<long>(rng() % 4)));
    const int blowups = static_cast<int>(rng() % 5);
    for (int b = 0; b < blowups; ++b) fan = fan2d::star_subdivide(fan, rng() % fan.size());
    const std::size_t i = rng() % fan.size(), j = rng() % fan.size();
    if (i != j && fan.ray(i) == -fan.ray(j)) continue;
    const auto r = lemma41_construction(fan, i, j);
    CHECK(r.split.horizontal.size() == 2);
    CHECK(r.split.horizontal.count(r.index_map[i]) == 0);
    CHECK(r.split.horizontal.count(r.index_map[j]) == 0);
    CHECK(r.split.over_zero.count(r.index_map[i]) == 1);
    CHECK(r.split.over_zero.count(r.index_map[j]) == 1);
    CHECK(r.split.over_zero.size() + r.split.over_infinity.size() + 2 == r.refined.size());
  }
}

TEST_CASE("example reports") {
  for (auto id : all_examples()) {
    const auto report = verify_example(id);
    CAPTURE(report.example_id);
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    CHECK(report.overall());
    CHECK(json_io::report_to_json(report).dump() ==
          json_io::report_to_json(verify_example(id)).dump());
  }
  CHECK_FALSE(verify_example(ExampleId::NodalLine).notes.empty());
  CHECK(parse_example_id("nodal-conic") == ExampleId::NodalConic);
  CHECK_FALSE(parse_example_id("bogus"));
}

TEST_CASE("normal quartic samples lie on the surface") {
  const auto q = poly::parse_poly(fixtures::kNormalQuartic, fixtures::kProjectiveVars);
  for (const auto& p : fixtures::normal_quartic_samples()) {
    CHECK(poly::evaluate_at(q, p) == 0);
    CHECK(p != std::vector<Rational>{1, 0, 0, 0});
  }
}
