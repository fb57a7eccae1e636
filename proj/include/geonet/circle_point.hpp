#pragma once

#include <Eigen/Core>

#include <optional>

#include "geonet/exact.hpp"

namespace geonet {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Maps any angle to [0, 2 pi).
double normalize_angle(double radians);

/// Exact form of a point on the unit circle.
///
/// The point is parametrized by t = tan(theta / 2) as
/// ((1 - t^2) / (1 + t^2), 2 t / (1 + t^2)); the point (-1, 0) has no finite
/// parameter and is marked by an empty `tan_half`.
struct ExactPoint {
  std::optional<Surd> tan_half;
  Surd x;
  Surd y;

  bool at_pi() const { return !tan_half.has_value(); }
  SurdVec2 coords() const { return {x, y}; }
};

/// Point on the unit circle: float angle plus optional exact data.
class CirclePoint {
 public:
  static CirclePoint from_angle(double radians);
  static CirclePoint from_tan_half(const Surd& t);
  static CirclePoint at_pi();
  /// Exact unit vector; throws ArithmeticError unless x^2 + y^2 == 1.
  static CirclePoint from_exact_coords(const Surd& x, const Surd& y);

  double angle() const { return angle_; }
  Eigen::Vector2d coords() const;

  bool is_exact() const { return exact_.has_value(); }
  /// Throws ExactDataMissing for float-only points.
  const ExactPoint& exact() const;

  /// The point rotated by minus the angle of `ref` (this * conj(ref)).
  CirclePoint rotated_back(const CirclePoint& ref) const;
  /// Mirror image in the x axis.
  CirclePoint reflected() const;

  /// Same exact point, or float angles within 1e-12 when either is inexact.
  bool same_point(const CirclePoint& other) const;

 private:
  CirclePoint(double angle, std::optional<ExactPoint> exact)
      : angle_(angle), exact_(std::move(exact)) {}

  double angle_ = 0.0;
  std::optional<ExactPoint> exact_;
};

/// Cyclic distance between two angles, in [0, pi].
double angular_distance(double a, double b);

}  // namespace geonet
