#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "geonet/combinatorics.hpp"
#include "geonet/errors.hpp"
#include "geonet/random.hpp"
#include "geonet/stationarity.hpp"

namespace geonet::testkit {

namespace {

long uniform_long(long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  return dist(random_engine());
}

double uniform_real(double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(random_engine());
}

Rational floor_q(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f);
}

}  // namespace

Rational random_rational(long max_num, long max_den) {
  Rational q(uniform_long(-max_num, max_num), uniform_long(1, max_den));
  q.canonicalize();
  return q;
}

Rational random_rational_between(const Rational& lo, const Rational& hi, long max_den) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const long q = uniform_long(1, max_den);
    const Rational first = floor_q(lo * q) + 1;
    const Rational last = -floor_q(-hi * q) - 1;
    if (first > last) continue;
    const long p = uniform_long(first.get_num().get_si(), last.get_num().get_si());
    Rational r(p, q);
    r.canonicalize();
    if (r > lo && r < hi) return r;
  }
  throw DomainError("no rational with small denominator in the interval");
}

N3Instance n3_instance(const Rational& u12, const Rational& u23) {
  const CirclePoint p12 = point_from_quarter_tangent(u12);
  const CirclePoint p23 = point_from_quarter_tangent(u23);
  return {u12, u23, p12, p23, n3_positions(p12, p23)};
}

N3Instance random_n3_instance(long max_den) {
  // a = 4 atan(u) lies in (0, pi) for u in (0, 1); a12 + a23 > pi means
  // u23 > (1 - u12) / (1 + u12).
  const Rational u12 = random_rational_between(Rational(0), Rational(1), max_den);
  Rational lo = (1 - u12) / (1 + u12);
  const Rational u23 = random_rational_between(lo, Rational(1), max_den);
  return n3_instance(u12, u23);
}

Network n3_network(const N3Instance& inst) {
  const std::vector<CirclePoint> pos(inst.positions.begin(), inst.positions.end());
  const auto system = build_system(pos, std::vector<EdgeIndexPair>{{0, 1}, {0, 2}, {1, 2}});
  const auto result = solve(system);
  if (result.kernel_basis.size() != 1) throw ArithmeticError("triangle kernel is not a line");
  return network_from_solution(system, result.kernel_basis.front());
}

std::vector<CirclePoint> random_rational_chord_positions(std::size_t n, long max_den) {
  std::set<Rational> us;
  while (us.size() < n) us.insert(random_rational_between(Rational(-1), Rational(1), max_den));
  std::vector<CirclePoint> pts;
  for (const auto& u : us) pts.push_back(point_from_quarter_tangent(u));
  std::sort(pts.begin(), pts.end(),
            [](const CirclePoint& a, const CirclePoint& b) { return a.angle() < b.angle(); });
  return pts;
}

std::optional<Network> random_admissible_n4(long max_den, long bound, int attempts) {
  // Generic quadruples almost never carry integer weights; rectangles with a
  // rational quarter tangent do, with and without a diagonal.
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const Rational u = random_rational_between(Rational(0), Rational(1), max_den);
    const CirclePoint p = point_from_quarter_tangent(u);
    if (p.same_point(CirclePoint::from_tan_half(Surd(1)))) continue;  // degenerate rectangle
    const CirclePoint flip = CirclePoint::at_pi();
    std::vector<CirclePoint> pts{p, p.reflected(), p.rotated_back(flip), p.reflected().rotated_back(flip)};
    std::sort(pts.begin(), pts.end(),
              [](const CirclePoint& a, const CirclePoint& b) { return a.angle() < b.angle(); });
    std::vector<Network> found;
    for_each_chord_set(4, true, [&](const ChordSet& s) {
      const auto deg = s.degrees();
      if (std::find(deg.begin(), deg.end(), 0) != deg.end()) return true;
      const auto system = build_system(pts, s);
      const auto sols = positive_integer_solutions(solve(system), bound);
      if (!sols.empty()) found.push_back(network_from_solution(system, sols.front()));
      return true;
    });
    if (found.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, found.size() - 1);
    return found[pick(random_engine())];
  }
  return std::nullopt;
}

Network rectangle_network() {
  std::vector<Vertex> v{{CirclePoint::from_tan_half(Surd(make_rational(1, 3))), 5},
                        {CirclePoint::from_tan_half(Surd(3)), 5},
                        {CirclePoint::from_tan_half(Surd(-3)), 5},
                        {CirclePoint::from_tan_half(Surd(make_rational(-1, 3))), 5}};
  return make_network(v, {{0, 1, 4}, {1, 2, 3}, {2, 3, 4}, {0, 3, 3}});
}

Network square_network() {
  std::vector<Vertex> v{{CirclePoint::from_tan_half(Surd(0)), 1},
                        {CirclePoint::from_tan_half(Surd(1)), 1},
                        {CirclePoint::at_pi(), 1},
                        {CirclePoint::from_tan_half(Surd(-1)), 1}};
  return make_network(v, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}});
}

Network small_triangle_network() {
  std::vector<Vertex> v{{CirclePoint::from_tan_half(Surd(0)), 100},
                        {CirclePoint::from_tan_half(Surd(make_rational(4, 3))), 56},
                        {CirclePoint::from_tan_half(Surd(make_rational(-24, 7))), 100}};
  return make_network(v, {{0, 1, 35}, {0, 2, 75}, {1, 2, 35}});
}

Network boundary_trace_network(int triangles) {
  for (;;) {
    std::vector<double> angles;
    std::vector<EdgeIndexPair> chords;
    bool degenerate = false;
    for (int t = 0; t < triangles && !degenerate; ++t) {
      std::array<Eigen::Vector2d, 3> tri;
      for (auto& p : tri) p = {uniform_real(-1.6, 1.6), uniform_real(-1.6, 1.6)};
      // Crossings in traversal order, with the direction of travel.
      std::vector<std::pair<double, bool>> crossings;  // (angle, entering)
      for (int k = 0; k < 3 && !degenerate; ++k) {
        const Eigen::Vector2d a = tri[k], d = tri[(k + 1) % 3] - tri[k];
        const double qa = d.dot(d), qb = 2 * a.dot(d), qc = a.dot(a) - 1;
        const double disc = qb * qb - 4 * qa * qc;
        if (std::fabs(qc) < 1e-6) degenerate = true;
        if (disc <= 1e-9) continue;
        std::array<double, 2> roots{(-qb - std::sqrt(disc)) / (2 * qa),
                                    (-qb + std::sqrt(disc)) / (2 * qa)};
        for (double s : roots) {
          if (s <= 0 || s >= 1) continue;
          const Eigen::Vector2d p = a + s * d;
          crossings.push_back({std::atan2(p.y(), p.x()), d.dot(p) < 0});
        }
      }
      const std::size_t base = angles.size();
      for (const auto& [angle, entering] : crossings) angles.push_back(angle);
      for (std::size_t k = 0; k < crossings.size(); ++k) {
        if (crossings[k].second) chords.emplace_back(base + k, base + (k + 1) % crossings.size());
      }
    }
    if (degenerate) continue;
    std::vector<Vertex> vertices;
    for (double a : angles) vertices.push_back({CirclePoint::from_angle(a), 1});
    std::vector<InteriorEdge> edges;
    for (const auto& [i, j] : chords) edges.push_back({i, j, 1});
    try {
      return make_network(std::move(vertices), std::move(edges));
    } catch (const Error&) {
      continue;  // coincident crossings; draw again
    }
  }
}

bool segments_cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b, const Eigen::Vector2d& c,
                    const Eigen::Vector2d& d) {
  auto orient = [](const Eigen::Vector2d& p, const Eigen::Vector2d& q, const Eigen::Vector2d& r) {
    const double v = (q - p).x() * (r - p).y() - (q - p).y() * (r - p).x();
    return (v > 1e-12) - (v < -1e-12);
  };
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

std::string global_identity_failure(const Network& net) {
  const auto inv = invariant_report(net);
  if (!inv.balance_vanishes) return "no exact data";
  if (!*inv.balance_vanishes) return "sum m_v v is not zero";
  if (!inv.mass_gap_vanishes || !*inv.mass_gap_vanishes) return "mass gap is not zero";
  return {};
}

std::vector<Rational> small_rationals(long limit) {
  std::set<Rational> out;
  for (long q = 1; q <= limit; ++q) {
    for (long p = -limit; p <= limit; ++p) {
      Rational r(p, q);
      r.canonicalize();
      out.insert(r);
    }
  }
  return {out.begin(), out.end()};
}

}  // namespace geonet::testkit
