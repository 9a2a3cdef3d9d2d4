#pragma once

// Cluster-type decision table for pairs (P^3, B) with B a quartic, the
// log discrepancy of weighted blow-ups, the toric fibration construction on
// surface fans, and the checks run against the three worked quartics.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lcylab/fan2d.hpp"
#include "lcylab/poly.hpp"

namespace lcylab::lcverify {

class DescriptorError : public std::runtime_error {
 public:
  explicit DescriptorError(const std::string& what)
      : std::runtime_error("InconsistentDescriptor: " + what) {}
};

enum class NodalLocus { ThreeConcurrentLines, TwistedCubic, PlaneConic, Line, None };

const char* to_string(NodalLocus locus);
/// Throws std::invalid_argument on unknown names.
NodalLocus parse_nodal_locus(std::string_view name);

struct ReducibleDetail {
  bool cubic_smooth_along_plane = false;
  bool plane_cubic_intersection_nodal = true;
};

struct IrreducibleDetail {
  NodalLocus nodal_locus = NodalLocus::None;
};

/// Hypotheses describing a quartic boundary B in P^3. Populate reducible
/// detail only for degrees {1,3} and irreducible detail only for {4}.
struct QuarticCaseDescriptor {
  std::vector<int> component_degrees;
  bool has_mult3_point = false;
  std::optional<ReducibleDetail> reducible;
  std::optional<IrreducibleDetail> irreducible;
};

enum class VerdictValue { ClusterType, NotClusterType, Open };

const char* to_string(VerdictValue v);

struct Verdict {
  VerdictValue value = VerdictValue::Open;
  std::string justification;
};

struct Citation {
  std::string key;
  std::string statement;
};

const std::vector<Citation>& citation_table();
const Citation* find_citation(std::string_view key);

/// Throws DescriptorError when the descriptor is malformed or contradicts
/// itself.
void validate(const QuarticCaseDescriptor& descriptor);

/// Decision table; the first matching rule wins:
///   1. point of multiplicity >= 3        -> cluster type
///   2. at least three components         -> cluster type
///   3. two quadrics                      -> cluster type
///   4. plane + cubic smooth along it     -> not cluster type
///   5. plane + cubic singular along it   -> cluster type
///   6. nodal locus not in a plane        -> cluster type
///   7-8. planar nodal locus, or normal   -> open
Verdict classify_quartic_pair(const QuarticCaseDescriptor& descriptor);

/// a(E) = sum(weights) - mult_w(f) for the exceptional divisor of the
/// weighted blow-up of the origin, for the pair (A^n, {f = 0}).
Rational weighted_blowup_log_discrepancy(const poly::MultiPoly& local_equation,
                                         const std::vector<long>& weights);

struct Lemma41Result {
  fan2d::RayVector rho0;
  fan2d::Fan2D refined;
  fan2d::FibrationSplit split;
  /// Index of each original ray in the refined fan.
  std::vector<std::size_t> index_map;
};

/// separating_ray, then insert_opposite_rays, then fibration_split. Rays i
/// and j land over zero. Throws FanError(OppositeRays) when rho_i = -rho_j.
Lemma41Result lemma41_construction(const fan2d::Fan2D& fan, std::size_t i, std::size_t j);

enum class ExampleId { NodalConic, NodalLine, NormalQuartic };

const char* to_string(ExampleId id);
std::optional<ExampleId> parse_example_id(std::string_view name);
const std::vector<ExampleId>& all_examples();

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::string example_id;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  bool overall() const;
};

VerificationReport verify_example(ExampleId id);

namespace fixtures {

inline const std::vector<std::string> kProjectiveVars{"t", "x", "y", "z"};

// Quartic double along a smooth plane conic.
inline constexpr const char* kNodalConic = "(t*y + x^2 - z^2)^2 - 4*x^2*(x^2 + y^2 - z^2)";
// Quartic double along a line.
inline constexpr const char* kNodalLine = "t^2*z^2 + x*y*z*t + x^2*y^2 + x^4 + t^4";
// Normal quartic with one triple point at [1:0:0:0].
inline constexpr const char* kNormalQuartic = "x*y*z*t + x^4 + y^4 + z^4";

/// Rational points of the normal quartic away from its triple point.
std::vector<std::vector<Rational>> normal_quartic_samples();

}  // namespace fixtures

}  // namespace lcylab::lcverify
