#include "lcylab/fan2d.hpp"

#include <algorithm>
#include <sstream>

namespace lcylab::fan2d {

const char* to_string(FanErrorKind kind) {
  switch (kind) {
    case FanErrorKind::ZeroRay: return "ZeroRay";
    case FanErrorKind::NonPrimitiveRay: return "NonPrimitiveRay";
    case FanErrorKind::NotCounterclockwise: return "NotCounterclockwise";
    case FanErrorKind::NotComplete: return "NotComplete";
    case FanErrorKind::TooFewRays: return "TooFewRays";
    case FanErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case FanErrorKind::NonCoprimeWeights: return "NonCoprimeWeights";
    case FanErrorKind::WouldBreakConvexity: return "WouldBreakConvexity";
    case FanErrorKind::TooFewRaysAfter: return "TooFewRaysAfter";
    case FanErrorKind::OppositeRays: return "OppositeRays";
    case FanErrorKind::MissingOppositeRays: return "MissingOppositeRays";
    case FanErrorKind::NegativeParameter: return "NegativeParameter";
  }
  return "FanError";
}

RayVector::RayVector(Integer x, Integer y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_ == 0 && y_ == 0) throw FanError(FanErrorKind::ZeroRay, "ray (0,0)");
  Integer g = gcd(x_, y_);
  if (g != 1) throw FanError(FanErrorKind::NonPrimitiveRay, "ray " + fan2d::to_string(*this));
}

RayVector RayVector::primitive_of(const Integer& x, const Integer& y) {
  if (x == 0 && y == 0) throw FanError(FanErrorKind::ZeroRay, "ray (0,0)");
  Integer g = gcd(x, y);
  return RayVector(x / g, y / g);
}

Integer det(const RayVector& a, const RayVector& b) { return a.x() * b.y() - a.y() * b.x(); }

std::string to_string(const RayVector& v) {
  return "(" + v.x().get_str() + "," + v.y().get_str() + ")";
}

namespace {

// True when the ccw arc (a, b] contains the positive x-axis. Requires det(a, b) > 0.
bool arc_contains_positive_axis(const RayVector& a, const RayVector& b) {
  // det(a, e1) = -a.y, det(e1, b) = b.y
  if (!(a.y() < 0)) return false;
  if (b.y() > 0) return true;
  return b.y() == 0 && b.x() > 0;
}

std::size_t wrap(std::size_t i, std::size_t n) { return i % n; }

void check_index(std::size_t i, std::size_t n, const char* what) {
  if (i >= n)
    throw FanError(FanErrorKind::IndexOutOfRange,
                   std::string(what) + " " + std::to_string(i) + " with " + std::to_string(n) +
                       " rays");
}

std::vector<RayVector> with_inserted(const std::vector<RayVector>& rays, std::size_t cone_index,
                                     RayVector v) {
  std::vector<RayVector> out(rays);
  out.insert(out.begin() + static_cast<long>(cone_index + 1), std::move(v));
  return out;
}

}  // namespace

Fan2D Fan2D::make(std::vector<RayVector> rays) {
  const std::size_t n = rays.size();
  if (n < 3)
    throw FanError(FanErrorKind::TooFewRays, std::to_string(n) + " rays, need at least 3");
  std::size_t crossings = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = rays[i];
    const auto& b = rays[wrap(i + 1, n)];
    if (det(a, b) <= 0)
      throw FanError(FanErrorKind::NotCounterclockwise,
                     "det" + to_string(a) + to_string(b) + " <= 0 at cone " + std::to_string(i));
    if (arc_contains_positive_axis(a, b)) ++crossings;
  }
  if (crossings != 1)
    throw FanError(FanErrorKind::NotComplete,
                   "rays wind " + std::to_string(crossings) + " times around the origin");
  return Fan2D(std::move(rays));
}

const RayVector& Fan2D::cyclic(std::size_t i, long offset) const {
  const long n = static_cast<long>(rays_.size());
  long k = (static_cast<long>(i) + offset) % n;
  if (k < 0) k += n;
  return rays_[static_cast<std::size_t>(k)];
}

std::size_t Fan2D::find(const RayVector& v) const {
  auto it = std::find(rays_.begin(), rays_.end(), v);
  return static_cast<std::size_t>(it - rays_.begin());
}

Fan2D make_fan(const std::vector<std::pair<Integer, Integer>>& rays) {
  std::vector<RayVector> vs;
  vs.reserve(rays.size());
  for (const auto& [x, y] : rays) vs.emplace_back(x, y);
  return Fan2D::make(std::move(vs));
}

bool is_smooth(const Fan2D& fan) {
  for (std::size_t i = 0; i < fan.size(); ++i)
    if (det(fan.ray(i), fan.cyclic(i, 1)) != 1) return false;
  return true;
}

SelfIntersectionProfile self_intersections(const Fan2D& fan) {
  SelfIntersectionProfile profile;
  profile.values.reserve(fan.size());
  for (std::size_t i = 0; i < fan.size(); ++i) {
    const auto& u = fan.cyclic(i, -1);
    const auto& v = fan.ray(i);
    const auto& w = fan.cyclic(i, 1);
    profile.values.push_back(make_rational(-det(u, w), det(u, v) * det(v, w)));
  }
  return profile;
}

Fan2D star_subdivide(const Fan2D& fan, std::size_t cone_index) {
  return weighted_star_subdivide(fan, cone_index, 1, 1);
}

Fan2D weighted_star_subdivide(const Fan2D& fan, std::size_t cone_index, const Integer& a,
                              const Integer& b) {
  if (a <= 0 || b <= 0 || gcd(a, b) != 1)
    throw FanError(FanErrorKind::NonCoprimeWeights,
                   "weights (" + a.get_str() + "," + b.get_str() + ")");
  check_index(cone_index, fan.size(), "cone");
  const auto& u = fan.ray(cone_index);
  const auto& w = fan.cyclic(cone_index, 1);
  auto v = RayVector::primitive_of(a * u.x() + b * w.x(), a * u.y() + b * w.y());
  return Fan2D::make(with_inserted(fan.rays(), cone_index, std::move(v)));
}

Fan2D contract_ray(const Fan2D& fan, std::size_t ray_index) {
  check_index(ray_index, fan.size(), "ray");
  if (fan.size() <= 3)
    throw FanError(FanErrorKind::TooFewRaysAfter, "removing a ray leaves fewer than 3 rays");
  if (det(fan.cyclic(ray_index, -1), fan.cyclic(ray_index, 1)) <= 0)
    throw FanError(FanErrorKind::WouldBreakConvexity,
                   "neighbours of ray " + std::to_string(ray_index) + " span no strict cone");
  std::vector<RayVector> rays(fan.rays());
  rays.erase(rays.begin() + static_cast<long>(ray_index));
  return Fan2D::make(std::move(rays));
}

RayVector separating_ray(const Fan2D& fan, std::size_t i, std::size_t j) {
  check_index(i, fan.size(), "ray");
  check_index(j, fan.size(), "ray");
  RayVector u = fan.ray(i);
  RayVector w = fan.ray(j);
  if (u == -w)
    throw FanError(FanErrorKind::OppositeRays, to_string(u) + " and " + to_string(w));
  // Linear form (a, b), evaluated as a*x + b*y.
  Integer a, b;
  if (u == w) {
    a = u.x();
    b = u.y();
  } else {
    if (det(u, w) < 0) std::swap(u, w);
    // Inward normals of cone(u, w): perpendicular to u and positive on w, and vice versa.
    a = -u.y() + w.y();
    b = u.x() - w.x();
  }
  return RayVector::primitive_of(-b, a);
}

Refinement refine_with_opposite_rays(const Fan2D& fan, const RayVector& rho0) {
  std::vector<RayVector> rays(fan.rays());
  std::vector<std::size_t> index_map(fan.size());
  for (std::size_t k = 0; k < index_map.size(); ++k) index_map[k] = k;

  for (const RayVector& target : {rho0, -rho0}) {
    if (std::find(rays.begin(), rays.end(), target) != rays.end()) continue;
    const std::size_t n = rays.size();
    for (std::size_t c = 0; c < n; ++c) {
      const auto& lo = rays[c];
      const auto& hi = rays[wrap(c + 1, n)];
      if (det(lo, target) > 0 && det(target, hi) > 0) {
        rays.insert(rays.begin() + static_cast<long>(c + 1), target);
        for (auto& idx : index_map)
          if (idx > c) ++idx;
        break;
      }
    }
  }
  return {Fan2D::make(std::move(rays)), std::move(index_map)};
}

Fan2D insert_opposite_rays(const Fan2D& fan, const RayVector& rho0) {
  return refine_with_opposite_rays(fan, rho0).fan;
}

FibrationSplit fibration_split(const Fan2D& fan, const RayVector& rho0) {
  if (fan.find(rho0) == fan.size() || fan.find(-rho0) == fan.size())
    throw FanError(FanErrorKind::MissingOppositeRays,
                   "fan lacks " + to_string(rho0) + " or its negative");
  FibrationSplit split;
  for (std::size_t k = 0; k < fan.size(); ++k) {
    const int s = sgn(det(fan.ray(k), rho0));
    if (s > 0)
      split.over_zero.insert(k);
    else if (s < 0)
      split.over_infinity.insert(k);
    else
      split.horizontal.insert(k);
  }
  return split;
}

Rational complexity(long dimension, const Rational& class_group_rank,
                    const Rational& boundary_coefficient_sum) {
  if (dimension < 1) throw std::invalid_argument("dimension must be positive");
  if (class_group_rank < 0 || boundary_coefficient_sum < 0)
    throw std::invalid_argument("rank and coefficient sum must be nonnegative");
  return Rational(dimension) + class_group_rank - boundary_coefficient_sum;
}

Fan2D standard_fan(const StandardFan& kind) {
  switch (kind.kind) {
    case StandardFan::Kind::Plane:
      return make_fan({{1, 0}, {0, 1}, {-1, -1}});
    case StandardFan::Kind::Hirzebruch:
      if (kind.n < 0)
        throw FanError(FanErrorKind::NegativeParameter,
                       "Hirzebruch parameter " + std::to_string(kind.n));
      return make_fan({{1, 0}, {0, 1}, {-1, kind.n}, {0, -1}});
    case StandardFan::Kind::WeightedPlane121:
      return make_fan({{1, 0}, {0, 1}, {-1, -2}});
  }
  throw std::logic_error("unknown standard fan");
}

}  // namespace lcylab::fan2d
