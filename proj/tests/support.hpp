#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "geonet/circle_point.hpp"
#include "geonet/network.hpp"
#include "geonet/solver.hpp"

namespace geonet::testkit {

/// p / q with |p| <= max_num and 1 <= q <= max_den, from the shared engine.
Rational random_rational(long max_num, long max_den);

/// Rational strictly inside (lo, hi) with denominator at most max_den.
Rational random_rational_between(const Rational& lo, const Rational& hi, long max_den);

/// Exact triangle with rational half-angle cosines and sines, so that C and
/// every chord length are rational.
struct N3Instance {
  Rational u12, u23;  // tan(a / 4)
  CirclePoint p12, p23;
  std::array<CirclePoint, 3> positions;
};

/// Random instance inside the admissible angle domain.
N3Instance random_n3_instance(long max_den = 12);
N3Instance n3_instance(const Rational& u12, const Rational& u23);

/// The admissible triangle on the instance with the smallest integer weights
/// (the primitive kernel vector of the full system).
Network n3_network(const N3Instance& inst);

/// Sorted distinct points e^{i a} with tan(a / 4) = p / q, |p| < q <= max_den.
/// All chord lengths between such points are rational.
std::vector<CirclePoint> random_rational_chord_positions(std::size_t n, long max_den);

/// Random admissible quadrilateral with weights at most `bound`: a rectangle
/// e^{+-ia}, -e^{+-ia} with tan(a / 4) of denominator at most max_den, and
/// one of its solvable chord structures. Empty after `attempts` failures.
std::optional<Network> random_admissible_n4(long max_den, long bound, int attempts);

/// Rectangle with vertices (+-4/5, +-3/5): exterior weight 5, horizontal sides
/// 4, vertical sides 3.
Network rectangle_network();

/// Square at angles 0, pi/2, pi, 3 pi/2 with the four sides, all weights 1.
Network square_network();

/// The triangle with vertex parameters 0, 4/3, -24/7 and weights
/// (m12, m13, m23) = (35, 75, 35), (m1, m2, m3) = (100, 56, 100).
Network small_triangle_network();

/// Trace on the unit circle of the boundary of a sum of random triangles:
/// every crossing of a triangle boundary with the circle becomes a vertex of
/// exterior weight 1, and the pieces inside the disk become chords.
Network boundary_trace_network(int triangles);

/// Floating segment intersection of the open segments ab and cd.
bool segments_cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
                    const Eigen::Vector2d& d);

/// Exact checks of sum m_v v = 0 and sum m_v = sum m_e |v - w|; empty on
/// success, otherwise a description of the failure.
std::string global_identity_failure(const Network& net);

/// Distinct rationals p / q with |p|, q <= limit, q >= 1, sorted.
std::vector<Rational> small_rationals(long limit);

}  // namespace geonet::testkit
