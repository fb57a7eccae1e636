#include "geonet/sweep.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "geonet/circle_point.hpp"

namespace geonet {

void SphereConfig::validate() const {
  if (!(radius > 0)) throw DomainError("sphere radius must be positive");
  if (!(c >= 0)) throw DomainError("curvature c must be nonnegative");
}

void Sweepout::validate() const {
  if (samples.size() < 2) throw DomainError("a sweepout needs at least two samples");
  for (std::size_t k = 0; k < samples.size(); ++k) {
    const auto& [t, region] = samples[k];
    if (t < 0 || t > 1) throw DomainError("sweepout parameter outside [0, 1]");
    if (region.phi < 0 || region.phi > kPi) throw DomainError("cap angle outside [0, pi]");
    if (k > 0 && !(t > samples[k - 1].first)) throw DomainError("sweepout parameter must increase");
  }
  if (samples.front().second.phi != 0.0) throw DomainError("sweepout must start empty");
  if (samples.back().second.phi != kPi) throw DomainError("sweepout must end full");
}

double c_length(const CapRegion& region, const SphereConfig& cfg) {
  const double r = cfg.radius;
  return kTwoPi * r * std::sin(region.phi) - cfg.c * kTwoPi * r * r * (1.0 - std::cos(region.phi));
}

double c_length_derivative(double phi, const SphereConfig& cfg) {
  const double r = cfg.radius;
  return kTwoPi * r * std::cos(phi) - kTwoPi * cfg.c * r * r * std::sin(phi);
}

Sweepout latitude_sweepout(std::size_t n) {
  if (n < 3) throw DomainError("latitude sweepout needs at least 3 samples");
  Sweepout s;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(n - 1);
    s.samples.push_back({t, CapRegion{k + 1 == n ? kPi : kPi * t}});
  }
  return s;
}

MinmaxEstimate minmax_estimate(const Sweepout& sweep, const SphereConfig& cfg) {
  sweep.validate();
  cfg.validate();
  std::size_t best = 0;
  double best_value = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < sweep.samples.size(); ++k) {
    const double v = c_length(sweep.samples[k].second, cfg);
    if (v > best_value) {
      best_value = v;
      best = k;
    }
  }
  double lo = sweep.samples[best == 0 ? 0 : best - 1].second.phi;
  double hi = sweep.samples[std::min(best + 1, sweep.samples.size() - 1)].second.phi;
  auto f = [&](double phi) { return c_length(CapRegion{phi}, cfg); };

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1), f2 = f(x2);
  while (hi - lo > 1e-10) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  const double phi = 0.5 * (lo + hi);
  MinmaxEstimate out{f(phi), phi};
  if (best_value > out.value) out = {best_value, sweep.samples[best].second.phi};
  return out;
}

std::string sweep_profile_csv(const Sweepout& sweep, const SphereConfig& cfg) {
  std::ostringstream os;
  os.precision(17);
  os << "t,phi,lc\n";
  for (const auto& [t, region] : sweep.samples) {
    os << t << ',' << region.phi << ',' << c_length(region, cfg) << '\n';
  }
  return os.str();
}

void PolyCurve::validate() const {
  if (points.size() < 8) throw DomainError("a curve needs at least 8 points");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (std::fabs(points[i].norm() - 1.0) > 1e-12) throw DomainError("curve point off the sphere");
    if (points[i] == points[(i + 1) % points.size()]) {
      throw DomainError("consecutive curve points coincide");
    }
  }
}

PolyCurve latitude_curve(double phi, std::size_t n) {
  PolyCurve curve;
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(n);
    curve.points.emplace_back(std::sin(phi) * std::cos(theta), std::sin(phi) * std::sin(theta),
                              std::cos(phi));
  }
  return curve;
}

namespace {

double arc(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  return std::atan2(a.cross(b).norm(), a.dot(b));
}

// Unit tangent at p of the minimizing arc towards q.
Eigen::Vector3d tangent_towards(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
  return (q - q.dot(p) * p).normalized();
}

double turning_angle(const Eigen::Vector3d& a, const Eigen::Vector3d& p, const Eigen::Vector3d& b) {
  const Eigen::Vector3d t_in = -tangent_towards(p, a);
  const Eigen::Vector3d t_out = tangent_towards(p, b);
  return std::atan2(p.dot(t_in.cross(t_out)), t_in.dot(t_out));
}

Eigen::Vector3d slerp(const Eigen::Vector3d& a, const Eigen::Vector3d& b, double f) {
  const double theta = arc(a, b);
  if (theta < 1e-15) return a;
  const Eigen::Vector3d v =
      (std::sin((1.0 - f) * theta) * a + std::sin(f * theta) * b) / std::sin(theta);
  return v.normalized();
}

void resample_uniform(PolyCurve& curve) {
  const std::size_t n = curve.size();
  std::vector<double> cumulative(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    cumulative[i + 1] = cumulative[i] + arc(curve.points[i], curve.points[(i + 1) % n]);
  }
  const double total = cumulative[n];
  std::vector<Eigen::Vector3d> out;
  out.reserve(n);
  std::size_t seg = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double target = total * static_cast<double>(j) / static_cast<double>(n);
    while (seg + 1 < n && cumulative[seg + 1] <= target) ++seg;
    const double len = cumulative[seg + 1] - cumulative[seg];
    const double f = len > 0 ? (target - cumulative[seg]) / len : 0.0;
    out.push_back(slerp(curve.points[seg], curve.points[(seg + 1) % n], f));
  }
  curve.points = std::move(out);
}

std::vector<double> curvatures(const PolyCurve& curve) {
  std::vector<double> k(curve.size());
  for (std::size_t i = 0; i < curve.size(); ++i) k[i] = discrete_geodesic_curvature(curve, i);
  return k;
}

}  // namespace

double discrete_geodesic_curvature(const PolyCurve& curve, std::size_t i) {
  const std::size_t n = curve.size();
  if (i >= n) throw IndexOutOfRange("curve index out of range");
  const auto& a = curve.points[(i + n - 1) % n];
  const auto& p = curve.points[i];
  const auto& b = curve.points[(i + 1) % n];
  const double mean_arc = 0.5 * (arc(a, p) + arc(p, b));
  return turning_angle(a, p, b) / mean_arc;
}

double curve_length(const PolyCurve& curve) {
  double total = 0.0;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    total += arc(curve.points[i], curve.points[(i + 1) % curve.size()]);
  }
  return total;
}

double left_area(const PolyCurve& curve) {
  const std::size_t n = curve.size();
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    turning += turning_angle(curve.points[(i + n - 1) % n], curve.points[i], curve.points[(i + 1) % n]);
  }
  return kTwoPi - turning;
}

double curve_c_length(const PolyCurve& curve, const SphereConfig& cfg) {
  const double r = cfg.radius;
  return r * curve_length(curve) - cfg.c * r * r * left_area(curve);
}

double latitude_spread(const PolyCurve& curve) {
  double mean = 0.0;
  for (const auto& p : curve.points) mean += p.z();
  mean /= static_cast<double>(curve.size());
  double spread = 0.0;
  for (const auto& p : curve.points) spread = std::max(spread, std::fabs(p.z() - mean));
  return spread;
}

FlowResult flow_to_cmc(const PolyCurve& curve, const SphereConfig& cfg, const FlowOptions& options) {
  cfg.validate();
  curve.validate();
  if (curve.size() < 32) throw DomainError("the flow needs at least 32 points");
  if (options.step < 0) throw DomainError("flow step must be positive");
  if (options.max_iters < 0) throw DomainError("max_iters must be nonnegative");

  // Work on the unit sphere, where the target curvature is c R.
  const double target = cfg.c * cfg.radius;
  const std::size_t n = curve.size();
  FlowResult state{curve, 0, 0.0, {}};
  resample_uniform(state.curve);
  const double step =
      options.step > 0 ? options.step : 0.1 * curve_length(state.curve) / static_cast<double>(n);

  FlowResult best;
  best.max_deviation = std::numeric_limits<double>::infinity();
  for (long iter = 0;; ++iter) {
    const auto kappa = curvatures(state.curve);
    double mean = 0.0, deviation = 0.0;
    for (double k : kappa) {
      mean += k;
      deviation = std::max(deviation, std::fabs(k - target));
    }
    mean /= static_cast<double>(n);
    state.iterations = iter;
    state.max_deviation = deviation;
    if (deviation < best.max_deviation) {
      best.curve = state.curve;
      best.iterations = iter;
      best.max_deviation = deviation;
    }
    if (deviation < options.kappa_tol) return state;
    if (iter >= options.max_iters) break;

    const double h = curve_length(state.curve) / static_cast<double>(n);
    const double mu = std::min(step, 0.2 * h * h);
    std::vector<Eigen::Vector3d> moved(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& p = state.curve.points[i];
      const auto& prev = state.curve.points[(i + n - 1) % n];
      const auto& next = state.curve.points[(i + 1) % n];
      const Eigen::Vector3d t = (next - prev - (next - prev).dot(p) * p).normalized();
      const Eigen::Vector3d left = p.cross(t);
      const double d = step * (target - mean) + mu * (kappa[i] - mean);
      moved[i] = (std::cos(d) * p + std::sin(d) * left).normalized();
    }
    state.curve.points = std::move(moved);
    resample_uniform(state.curve);
    if (options.record_history) state.c_length_history.push_back(curve_c_length(state.curve, cfg));
  }
  best.c_length_history = std::move(state.c_length_history);
  std::ostringstream os;
  os << "flow stopped after " << options.max_iters << " iterations with max |kappa - c| = "
     << best.max_deviation;
  throw NonConvergence(os.str(), std::move(best));
}

PolyCurve flow_to_cmc(const PolyCurve& curve, const SphereConfig& cfg, double step,
                      long max_iters) {
  if (!(step > 0)) throw DomainError("flow step must be positive");
  FlowOptions options;
  options.step = step;
  options.max_iters = max_iters;
  return flow_to_cmc(curve, cfg, options).curve;
}

}  // namespace geonet
