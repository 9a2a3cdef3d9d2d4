#include "lcylab/lcverify.hpp"

#include <algorithm>
#include <numeric>

namespace lcylab::lcverify {

using poly::MultiPoly;

const char* to_string(NodalLocus locus) {
  switch (locus) {
    case NodalLocus::ThreeConcurrentLines: return "ThreeConcurrentLines";
    case NodalLocus::TwistedCubic: return "TwistedCubic";
    case NodalLocus::PlaneConic: return "PlaneConic";
    case NodalLocus::Line: return "Line";
    case NodalLocus::None: return "None";
  }
  return "None";
}

NodalLocus parse_nodal_locus(std::string_view name) {
  for (auto l : {NodalLocus::ThreeConcurrentLines, NodalLocus::TwistedCubic,
                 NodalLocus::PlaneConic, NodalLocus::Line, NodalLocus::None})
    if (name == to_string(l)) return l;
  throw std::invalid_argument("unknown nodal locus: " + std::string(name));
}

const char* to_string(VerdictValue v) {
  switch (v) {
    case VerdictValue::ClusterType: return "ClusterType";
    case VerdictValue::NotClusterType: return "NotClusterType";
    case VerdictValue::Open: return "Open";
  }
  return "Open";
}

const std::vector<Citation>& citation_table() {
  static const std::vector<Citation> table{
      {"mult3-point", "a point of multiplicity at least three on B makes (P^3,B) cluster type"},
      {"three-components", "B with at least three components makes (P^3,B) cluster type"},
      {"two-quadrics", "B the sum of two quadrics makes (P^3,B) cluster type"},
      {"plane-cubic-smooth",
       "B = H + C with the cubic C smooth along the plane H is not of cluster type"},
      {"plane-cubic-singular",
       "B = H + C with C singular along H has a triple point, so (P^3,B) is cluster type"},
      {"nodal-locus-nonplanar",
       "irreducible non-normal B whose nodal locus is three concurrent lines or a twisted "
       "cubic is cluster type"},
      {"nodal-locus-planar",
       "irreducible B nodal along a plane conic or a line without a triple point is undecided"},
      {"normal-no-triple-point", "irreducible normal B without a triple point is undecided"},
  };
  return table;
}

const Citation* find_citation(std::string_view key) {
  for (const auto& c : citation_table())
    if (c.key == key) return &c;
  return nullptr;
}

void validate(const QuarticCaseDescriptor& d) {
  if (d.component_degrees.empty()) throw DescriptorError("no components");
  for (int deg : d.component_degrees)
    if (deg <= 0) throw DescriptorError("component degrees must be positive");
  if (std::accumulate(d.component_degrees.begin(), d.component_degrees.end(), 0) != 4)
    throw DescriptorError("component degrees must sum to 4");
  if (d.reducible && d.irreducible)
    throw DescriptorError("both reducible and irreducible detail given");

  std::vector<int> degrees(d.component_degrees);
  std::sort(degrees.begin(), degrees.end());
  if (degrees.size() == 1) {
    if (!d.irreducible) throw DescriptorError("irreducible quartic needs irreducible detail");
    return;
  }
  if (d.irreducible) throw DescriptorError("reducible quartic with irreducible detail");
  const bool plane_cubic = degrees == std::vector<int>{1, 3};
  if (plane_cubic && !d.reducible)
    throw DescriptorError("plane + cubic needs reducible detail");
  if (!plane_cubic && d.reducible)
    throw DescriptorError("reducible detail only applies to plane + cubic");
  if (plane_cubic && d.reducible->cubic_smooth_along_plane) {
    // Smooth along H: every point of H has multiplicity <= 2, and the
    // intersection must be a cycle of curves.
    if (d.has_mult3_point)
      throw DescriptorError("cubic smooth along the plane leaves no triple point on H + C");
    if (!d.reducible->plane_cubic_intersection_nodal)
      throw DescriptorError("cubic smooth along the plane must meet it in a nodal cubic");
  }
}

Verdict classify_quartic_pair(const QuarticCaseDescriptor& d) {
  validate(d);
  if (d.has_mult3_point) return {VerdictValue::ClusterType, "mult3-point"};
  if (d.component_degrees.size() >= 3) return {VerdictValue::ClusterType, "three-components"};
  if (d.component_degrees.size() == 2) {
    if (d.component_degrees[0] == 2) return {VerdictValue::ClusterType, "two-quadrics"};
    if (d.reducible->cubic_smooth_along_plane)
      return {VerdictValue::NotClusterType, "plane-cubic-smooth"};
    return {VerdictValue::ClusterType, "plane-cubic-singular"};
  }
  switch (d.irreducible->nodal_locus) {
    case NodalLocus::ThreeConcurrentLines:
    case NodalLocus::TwistedCubic:
      return {VerdictValue::ClusterType, "nodal-locus-nonplanar"};
    case NodalLocus::PlaneConic:
    case NodalLocus::Line:
      return {VerdictValue::Open, "nodal-locus-planar"};
    case NodalLocus::None:
      break;
  }
  return {VerdictValue::Open, "normal-no-triple-point"};
}

Rational weighted_blowup_log_discrepancy(const MultiPoly& local_equation,
                                         const std::vector<long>& weights) {
  const Integer mult = poly::weighted_multiplicity(local_equation, weights);
  Integer total(0);
  for (long w : weights) total += w;
  return Rational(total - mult);
}

Lemma41Result lemma41_construction(const fan2d::Fan2D& fan, std::size_t i, std::size_t j) {
  auto rho0 = fan2d::separating_ray(fan, i, j);
  auto refinement = fan2d::refine_with_opposite_rays(fan, rho0);
  auto split = fan2d::fibration_split(refinement.fan, rho0);
  return {std::move(rho0), std::move(refinement.fan), std::move(split),
          std::move(refinement.index_map)};
}

const char* to_string(ExampleId id) {
  switch (id) {
    case ExampleId::NodalConic: return "nodal-conic";
    case ExampleId::NodalLine: return "nodal-line";
    case ExampleId::NormalQuartic: return "normal-quartic";
  }
  return "";
}

std::optional<ExampleId> parse_example_id(std::string_view name) {
  for (auto id : all_examples())
    if (name == to_string(id)) return id;
  return std::nullopt;
}

const std::vector<ExampleId>& all_examples() {
  static const std::vector<ExampleId> ids{ExampleId::NodalConic, ExampleId::NodalLine,
                                          ExampleId::NormalQuartic};
  return ids;
}

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

namespace fixtures {

std::vector<std::vector<Rational>> normal_quartic_samples() {
  // (x, y, z) with xyz != 0 and t = -(x^4 + y^4 + z^4) / (xyz).
  return {
      {Rational(-3), Rational(1), Rational(1), Rational(1)},
      {Rational(3), Rational(1), Rational(1), Rational(-1)},
      {Rational(-9), Rational(1), Rational(2), Rational(1)},
      {Rational(9), Rational(1), Rational(-1), Rational(2)},
      {make_rational(-49, 3), Rational(2), Rational(1), Rational(3)},
  };
}

}  // namespace fixtures

namespace {

std::string point_text(const std::vector<Rational>& p, bool projective) {
  std::string s = projective ? "[" : "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += projective ? ":" : ",";
    s += lcylab::to_string(p[i]);
  }
  return s + (projective ? "]" : ")");
}

std::vector<Rational> point(std::initializer_list<Rational> coords) { return coords; }

class ReportBuilder {
 public:
  explicit ReportBuilder(std::string id) { report_.example_id = std::move(id); }

  void check(std::string name, bool passed, std::string detail) {
    report_.checks.push_back({std::move(name), passed, std::move(detail)});
  }

  template <class T>
  void expect_equal(std::string name, const T& got, const T& want, const std::string& what) {
    using lcylab::to_string;
    using std::to_string;
    check(std::move(name), got == want,
          what + " = " + to_string(got) + " (expected " + to_string(want) + ")");
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  VerificationReport finish() { return std::move(report_); }

 private:
  VerificationReport report_;
};

VerificationReport verify_nodal_conic() {
  using fixtures::kProjectiveVars;
  ReportBuilder r(to_string(ExampleId::NodalConic));
  const MultiPoly quartic = poly::parse_poly(fixtures::kNodalConic, kProjectiveVars);

  const auto var = [](const char* v) { return MultiPoly::variable(kProjectiveVars, v); };
  const MultiPoly phi = poly::parse_poly("t*y + x^2 - z^2", kProjectiveVars);
  const MultiPoly psi = poly::parse_poly("x^2 + y^2 - z^2", kProjectiveVars);
  const MultiPoly rewritten = phi * phi - MultiPoly::constant(kProjectiveVars, 4) * var("x") *
                                              var("x") * psi;
  r.check("phi-psi-form", rewritten == quartic, "phi^2 - 4*x^2*psi equals the quartic");

  const auto conic = poly::make_parametrization(
      {"s", "u"}, {{"t", "s^2"}, {"x", "0"}, {"y", "u^2"}, {"z", "s*u"}});
  r.check("conic-on-surface", poly::substitute(quartic, conic).is_zero(),
          "quartic vanishes on [s^2:0:u^2:s*u]");
  r.check("gradient-vanishes-on-conic", poly::gradient_vanishes_on_curve(quartic, conic),
          "all four partials vanish on [s^2:0:u^2:s*u]");

  const MultiPoly chart = poly::dehomogenize(quartic, "t");
  const MultiPoly expected_chart =
      poly::parse_poly("(y + x^2 - z^2)^2 - 4*x^2*(y^2 + x^2 - z^2)", chart.variables());
  r.check("chart-t-equation", chart == expected_chart, "t = 1 chart: " + poly::to_string(chart));

  const std::vector<long> w121{1, 2, 1};
  r.expect_equal("weighted-multiplicity-121", poly::weighted_multiplicity(chart, w121),
                 Integer(4), "mult_(1,2,1)");
  r.expect_equal("log-discrepancy-121", weighted_blowup_log_discrepancy(chart, w121),
                 Rational(0), "a(E)");
  const MultiPoly initial = poly::weighted_initial_form(chart, w121);
  const MultiPoly expected_initial =
      poly::parse_poly("(y + x^2 - z^2)^2 - 4*x^2*(x^2 - z^2)", chart.variables());
  r.check("exceptional-curve-equation", initial == expected_initial,
          "weight-4 part: " + poly::to_string(initial));

  const auto node = point({Rational(0), make_rational(1, 4), make_rational(1, 2)});
  const auto pinch = point({Rational(0), Rational(1), Rational(1)});
  const MultiPoly chart_psi = poly::dehomogenize(psi, "t");
  r.check("node-point-on-conic",
          poly::evaluate_at(chart, node) == 0 && poly::evaluate_at(chart_psi, node) != 0,
          point_text(node, false) + " lies on B with psi != 0");
  r.expect_equal("hessian-rank-node", poly::hessian_rank_at(chart, node), std::size_t{2},
                 "Hessian rank at " + point_text(node, false));
  r.check("pinch-point-on-conic",
          poly::evaluate_at(chart, pinch) == 0 && poly::evaluate_at(chart_psi, pinch) == 0,
          point_text(pinch, false) + " lies on B with psi = 0");
  r.expect_equal("hessian-rank-pinch", poly::hessian_rank_at(chart, pinch), std::size_t{1},
                 "Hessian rank at " + point_text(pinch, false));

  r.expect_equal("origin-multiplicity",
                 poly::multiplicity_at_point(chart, point({Rational(0), Rational(0), Rational(0)})),
                 2UL, "mult at [1:0:0:0]");
  return r.finish();
}

VerificationReport verify_nodal_line() {
  using fixtures::kProjectiveVars;
  ReportBuilder r(to_string(ExampleId::NodalLine));
  const MultiPoly quartic = poly::parse_poly(fixtures::kNodalLine, kProjectiveVars);

  const auto line =
      poly::make_parametrization({"u", "v"}, {{"t", "0"}, {"x", "0"}, {"y", "u"}, {"z", "v"}});
  r.check("gradient-vanishes-on-line", poly::gradient_vanishes_on_curve(quartic, line),
          "all four partials vanish on [0:0:u:v]");

  const MultiPoly chart_y = poly::dehomogenize(quartic, "y");
  const MultiPoly expected_y =
      poly::parse_poly("t^2*z^2 + x*z*t + x^2 + x^4 + t^4", chart_y.variables());
  r.check("chart-y-equation", chart_y == expected_y, "y = 1 chart: " + poly::to_string(chart_y));
  const MultiPoly chart_z = poly::dehomogenize(quartic, "z");

  const std::vector<long> w_y{1, 2, 1};  // (t, x, z)
  const std::vector<long> w_z{2, 1, 1};  // (t, x, y)
  r.expect_equal("weighted-multiplicity-chart-y-121", poly::weighted_multiplicity(chart_y, w_y),
                 Integer(4), "mult_(1,2,1) at p = [0:0:1:0]");
  r.expect_equal("weighted-multiplicity-chart-z-211", poly::weighted_multiplicity(chart_z, w_z),
                 Integer(4), "mult_(2,1,1) at q = [0:0:0:1]");
  r.expect_equal("log-discrepancy-chart-y", weighted_blowup_log_discrepancy(chart_y, w_y),
                 Rational(0), "a(E) at p");
  r.expect_equal("log-discrepancy-chart-z", weighted_blowup_log_discrepancy(chart_z, w_z),
                 Rational(0), "a(E) at q");

  const auto origin = point({Rational(0), Rational(0), Rational(0)});
  r.expect_equal("origin-multiplicity-chart-y", poly::multiplicity_at_point(chart_y, origin), 2UL,
                 "mult at p");

  const auto sample = point({Rational(0), Rational(0), Rational(1), Rational(1)});
  const auto local = poly::affine_chart_at(quartic, sample);
  r.expect_equal("hessian-rank-generic-line-point",
                 poly::hessian_rank_at(local.equation, local.point), std::size_t{2},
                 "Hessian rank at " + point_text(sample, true) + " in chart " +
                     local.chart_variable + " = 1");

  if (!poly::is_weighted_homogeneous(chart_y, w_y))
    r.note("y = 1 chart is not weighted homogeneous for (1,2,1): x^4 has weight 8; its "
           "weighted multiplicity is 4");
  return r.finish();
}

VerificationReport verify_normal_quartic() {
  using fixtures::kProjectiveVars;
  ReportBuilder r(to_string(ExampleId::NormalQuartic));
  const MultiPoly quartic = poly::parse_poly(fixtures::kNormalQuartic, kProjectiveVars);
  const MultiPoly chart = poly::dehomogenize(quartic, "t");
  r.expect_equal("origin-multiplicity",
                 poly::multiplicity_at_point(chart, point({Rational(0), Rational(0), Rational(0)})),
                 3UL, "mult at p = [1:0:0:0]");

  int index = 0;
  for (const auto& sample : fixtures::normal_quartic_samples()) {
    const bool on_surface = poly::evaluate_at(quartic, sample) == 0;
    const auto grad = poly::gradient_at(quartic, sample);
    const bool smooth =
        std::any_of(grad.begin(), grad.end(), [](const Rational& g) { return g != 0; });
    r.check("smooth-sample-" + std::to_string(++index), on_surface && smooth,
            point_text(sample, true) + (on_surface ? " on B" : " NOT on B") +
                (smooth ? ", gradient nonzero" : ", gradient zero"));
  }

  QuarticCaseDescriptor descriptor{{4}, true, std::nullopt, IrreducibleDetail{NodalLocus::None}};
  const Verdict verdict = classify_quartic_pair(descriptor);
  r.check("classification",
          verdict.value == VerdictValue::ClusterType && verdict.justification == "mult3-point",
          std::string(to_string(verdict.value)) + " via " + verdict.justification);
  return r.finish();
}

}  // namespace

VerificationReport verify_example(ExampleId id) {
  switch (id) {
    case ExampleId::NodalConic: return verify_nodal_conic();
    case ExampleId::NodalLine: return verify_nodal_line();
    case ExampleId::NormalQuartic: return verify_normal_quartic();
  }
  throw std::logic_error("unknown example");
}

}  // namespace lcylab::lcverify
