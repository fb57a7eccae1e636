#include "geonet/circle_point.hpp"

#include <cmath>

#include "geonet/errors.hpp"

namespace geonet {

double normalize_angle(double radians) {
  double a = std::fmod(radians, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double angular_distance(double a, double b) {
  double d = std::fabs(normalize_angle(a) - normalize_angle(b));
  return std::min(d, kTwoPi - d);
}

CirclePoint CirclePoint::from_angle(double radians) {
  return CirclePoint(normalize_angle(radians), std::nullopt);
}

CirclePoint CirclePoint::from_tan_half(const Surd& t) {
  Surd t2 = t * t;
  Surd inv = (Surd(1) + t2).inverse();
  ExactPoint p{t, (Surd(1) - t2) * inv, Surd(2) * t * inv};
  double angle = normalize_angle(std::atan2(p.y.to_double(), p.x.to_double()));
  return CirclePoint(angle, std::move(p));
}

CirclePoint CirclePoint::at_pi() {
  return CirclePoint(kPi, ExactPoint{std::nullopt, Surd(-1), Surd(0)});
}

CirclePoint CirclePoint::from_exact_coords(const Surd& x, const Surd& y) {
  if (x * x + y * y != Surd(1)) {
    throw ArithmeticError("not a unit vector: (" + x.str() + ", " + y.str() + ")");
  }
  if (x == Surd(-1)) return at_pi();
  Surd t = y * (Surd(1) + x).inverse();
  double angle = normalize_angle(std::atan2(y.to_double(), x.to_double()));
  return CirclePoint(angle, ExactPoint{t, x, y});
}

Eigen::Vector2d CirclePoint::coords() const {
  if (exact_) return {exact_->x.to_double(), exact_->y.to_double()};
  return {std::cos(angle_), std::sin(angle_)};
}

const ExactPoint& CirclePoint::exact() const {
  if (!exact_) throw ExactDataMissing("circle point has no exact form");
  return *exact_;
}

CirclePoint CirclePoint::rotated_back(const CirclePoint& ref) const {
  if (exact_ && ref.exact_) {
    const auto& a = *exact_;
    const auto& b = *ref.exact_;
    // a * conj(b)
    Surd x = a.x * b.x + a.y * b.y;
    Surd y = a.y * b.x - a.x * b.y;
    return from_exact_coords(x, y);
  }
  return from_angle(angle_ - ref.angle_);
}

CirclePoint CirclePoint::reflected() const {
  if (exact_) {
    if (exact_->at_pi()) return at_pi();
    return from_tan_half(-*exact_->tan_half);
  }
  return from_angle(-angle_);
}

bool CirclePoint::same_point(const CirclePoint& other) const {
  if (exact_ && other.exact_) {
    return exact_->x == other.exact_->x && exact_->y == other.exact_->y;
  }
  return angular_distance(angle_, other.angle_) < 1e-12;
}

}  // namespace geonet
