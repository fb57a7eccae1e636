#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "geonet/errors.hpp"

namespace geonet {

/// Round sphere of the given radius and prescribed geodesic curvature c.
struct SphereConfig {
  double radius = 1.0;
  double c = 0.0;

  /// Throws DomainError unless radius > 0 and c >= 0.
  void validate() const;
};

/// Polar cap {colatitude <= phi}.
struct CapRegion {
  double phi = 0.0;
};

/// Caps indexed by t in [0, 1], from the empty cap to the whole sphere.
struct Sweepout {
  std::vector<std::pair<double, CapRegion>> samples;

  /// Throws DomainError unless t increases strictly, phi stays in [0, pi],
  /// and the family starts empty and ends full.
  void validate() const;
};

/// length(boundary) - c * area on the round sphere:
/// 2 pi R sin(phi) - c * 2 pi R^2 (1 - cos(phi)).
double c_length(const CapRegion& region, const SphereConfig& cfg);

/// d/dphi of c_length: 2 pi R cos(phi) - 2 pi c R^2 sin(phi).
double c_length_derivative(double phi, const SphereConfig& cfg);

/// n samples with phi_k = pi k / (n - 1) and t_k = k / (n - 1); n >= 3.
Sweepout latitude_sweepout(std::size_t n);

struct MinmaxEstimate {
  double value = 0.0;
  double argmax_phi = 0.0;
};

/// Largest c_length over the samples, refined by golden-section search on the
/// two neighbouring intervals to 1e-10 in phi.
MinmaxEstimate minmax_estimate(const Sweepout& sweep, const SphereConfig& cfg);

/// "t,phi,lc" rows for each sample, with a header line.
std::string sweep_profile_csv(const Sweepout& sweep, const SphereConfig& cfg);

/// Closed polygon on the unit sphere; consecutive points are joined by
/// minimizing geodesic arcs. Curves on a sphere of radius R are represented
/// by their unit-sphere image.
struct PolyCurve {
  std::vector<Eigen::Vector3d> points;

  /// Throws DomainError unless there are at least 8 points, all of norm 1
  /// within 1e-12, with consecutive points distinct.
  void validate() const;
  std::size_t size() const { return points.size(); }
};

/// The latitude at colatitude phi, n points, counterclockwise seen from the
/// north pole (so the cap lies to the left).
PolyCurve latitude_curve(double phi, std::size_t n);

/// Signed turning angle at point i between the arcs (i-1, i) and (i, i+1),
/// positive when turning left, divided by the mean of the two arc lengths.
/// Unit sphere; divide by R for a sphere of radius R.
double discrete_geodesic_curvature(const PolyCurve& curve, std::size_t i);

/// Total length of the polygon on the unit sphere.
double curve_length(const PolyCurve& curve);

/// Area to the left of the polygon on the unit sphere, by Gauss-Bonnet:
/// 2 pi minus the sum of turning angles.
double left_area(const PolyCurve& curve);

/// length - c * left_area on the sphere of radius cfg.radius.
double curve_c_length(const PolyCurve& curve, const SphereConfig& cfg);

/// Largest deviation of the z coordinates from their mean.
double latitude_spread(const PolyCurve& curve);

struct FlowOptions {
  /// Time step; zero selects 0.1 times the mean spacing.
  double step = 0.0;
  long max_iters = 100000;
  /// Stop once max_i |kappa_i - c| falls below this.
  double kappa_tol = 1e-3;
  /// Record curve_c_length after every iteration.
  bool record_history = false;
};

struct FlowResult {
  PolyCurve curve;
  long iterations = 0;
  double max_deviation = 0.0;
  std::vector<double> c_length_history;
};

/// Raised when the flow does not reach the tolerance; carries the iterate
/// with the smallest curvature deviation.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, FlowResult best)
      : Error(what), best_(std::move(best)) {}
  const FlowResult& best() const { return best_; }

 private:
  FlowResult best_;
};

/// Drives a closed curve to constant geodesic curvature c.
///
/// Each step moves point i towards its left by
///   step * (c - mean kappa) + mu * (kappa_i - mean kappa),  mu = min(step, 0.2 h^2),
/// i.e. the mean curvature is pushed to c while the fluctuations are smoothed
/// as in curve shortening, and then redistributes the points uniformly in arc
/// length. Needs at least 32 points and step > 0 (or the default).
FlowResult flow_to_cmc(const PolyCurve& curve, const SphereConfig& cfg, const FlowOptions& options);

/// Convenience form returning only the final curve.
PolyCurve flow_to_cmc(const PolyCurve& curve, const SphereConfig& cfg, double step,
                      long max_iters);

}  // namespace geonet
