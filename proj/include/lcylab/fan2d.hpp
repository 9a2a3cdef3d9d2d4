#pragma once

// Complete fans in the rank-2 lattice.
//
// A fan is stored as its rays in counterclockwise cyclic order starting at
// index 0. Cone i is spanned by rays i and i+1 (indices taken mod the ray
// count). All arithmetic is exact.

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcylab/exact.hpp"

namespace lcylab::fan2d {

enum class FanErrorKind {
  ZeroRay,
  NonPrimitiveRay,
  NotCounterclockwise,
  NotComplete,
  TooFewRays,
  IndexOutOfRange,
  NonCoprimeWeights,
  WouldBreakConvexity,
  TooFewRaysAfter,
  OppositeRays,
  MissingOppositeRays,
  NegativeParameter,
};

const char* to_string(FanErrorKind kind);

class FanError : public std::runtime_error {
 public:
  FanError(FanErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  FanErrorKind kind() const noexcept { return kind_; }

 private:
  FanErrorKind kind_;
};

/// Primitive nonzero lattice vector.
class RayVector {
 public:
  /// Throws FanError(ZeroRay | NonPrimitiveRay).
  RayVector(Integer x, Integer y);

  /// Divides out the content of a nonzero vector.
  static RayVector primitive_of(const Integer& x, const Integer& y);

  const Integer& x() const { return x_; }
  const Integer& y() const { return y_; }
  RayVector operator-() const { return RayVector(-x_, -y_); }

  friend bool operator==(const RayVector& a, const RayVector& b) {
    return a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  Integer x_;
  Integer y_;
};

Integer det(const RayVector& a, const RayVector& b);
std::string to_string(const RayVector& v);

class Fan2D {
 public:
  /// Validates and builds a complete fan (see make_fan).
  static Fan2D make(std::vector<RayVector> rays);

  const std::vector<RayVector>& rays() const { return rays_; }
  std::size_t size() const { return rays_.size(); }
  const RayVector& ray(std::size_t i) const { return rays_.at(i); }
  /// Ray at a cyclic offset from i.
  const RayVector& cyclic(std::size_t i, long offset) const;
  /// Index of v among the rays, or size() when absent.
  std::size_t find(const RayVector& v) const;

  friend bool operator==(const Fan2D& a, const Fan2D& b) { return a.rays_ == b.rays_; }

 private:
  explicit Fan2D(std::vector<RayVector> rays) : rays_(std::move(rays)) {}
  std::vector<RayVector> rays_;
};

struct SelfIntersectionProfile {
  std::vector<Rational> values;
  friend bool operator==(const SelfIntersectionProfile&, const SelfIntersectionProfile&) = default;
};

/// Partition of ray indices by the sign of the fibration form.
struct FibrationSplit {
  std::set<std::size_t> over_zero;
  std::set<std::size_t> over_infinity;
  std::set<std::size_t> horizontal;
};

/// Errors: NonPrimitiveRay, ZeroRay, NotCounterclockwise, NotComplete, TooFewRays.
Fan2D make_fan(const std::vector<std::pair<Integer, Integer>>& rays);

bool is_smooth(const Fan2D& fan);

/// D_v^2 = -det(u, w) / (det(u, v) det(v, w)) for v with neighbours u, w.
SelfIntersectionProfile self_intersections(const Fan2D& fan);

/// Inserts v_i + v_{i+1}; the new ray lands at index cone_index + 1.
Fan2D star_subdivide(const Fan2D& fan, std::size_t cone_index);

/// Inserts the primitive generator of a v_i + b v_{i+1} at index cone_index + 1.
Fan2D weighted_star_subdivide(const Fan2D& fan, std::size_t cone_index, const Integer& a,
                              const Integer& b);

Fan2D contract_ray(const Fan2D& fan, std::size_t ray_index);

/// Primitive rho0 spanning the kernel of a form that is strictly positive on
/// rays i and j. The form is the sum of the two primitive generators of the
/// dual cone of cone(rho_i, rho_j) (or rho_i itself when the rays coincide),
/// and rho0 is its counterclockwise quarter-turn, so det(rho_i, rho0) > 0.
RayVector separating_ray(const Fan2D& fan, std::size_t i, std::size_t j);

/// Result of insert_opposite_rays together with the old-to-new index map.
struct Refinement {
  Fan2D fan;
  std::vector<std::size_t> index_map;
};

Refinement refine_with_opposite_rays(const Fan2D& fan, const RayVector& rho0);
Fan2D insert_opposite_rays(const Fan2D& fan, const RayVector& rho0);

/// Splits rays by the sign of lambda(v) = det(v, rho0). lambda is primitive,
/// vanishes on +-rho0 and is positive on the ray preceding rho0.
FibrationSplit fibration_split(const Fan2D& fan, const RayVector& rho0);

/// dim X + rank Cl(X)_Q - |B|.
Rational complexity(long dimension, const Rational& class_group_rank,
                    const Rational& boundary_coefficient_sum);

struct StandardFan {
  enum class Kind { Plane, Hirzebruch, WeightedPlane121 };
  Kind kind = Kind::Plane;
  long n = 0;

  static StandardFan plane() { return {Kind::Plane, 0}; }
  static StandardFan hirzebruch(long n) { return {Kind::Hirzebruch, n}; }
  static StandardFan weighted_plane_121() { return {Kind::WeightedPlane121, 0}; }
};

Fan2D standard_fan(const StandardFan& kind);

}  // namespace lcylab::fan2d
