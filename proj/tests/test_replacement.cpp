#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "geonet/angle_expr.hpp"
#include "geonet/errors.hpp"
#include "geonet/random.hpp"
#include "geonet/replacement.hpp"
#include "geonet/stationarity.hpp"
#include "support.hpp"

using namespace geonet;
namespace tk = geonet::testkit;

namespace {

const AngleExpr a12 = AngleExpr::variable("a12");
const AngleExpr a13 = AngleExpr::variable("a13");
const AngleExpr a23 = AngleExpr::variable("a23");

double mod_two_pi_distance(double x, double y) {
  const double d = std::fmod(std::fabs(x - y), kTwoPi);
  return std::min(d, kTwoPi - d);
}

// One replacement at vertex k (0-based) computed from the geometry: the new
// vertices are the exterior direction of v_k and the chord directions
// towards the others, rotated so the exterior direction sits at angle 0.
std::array<double, 3> geometric_step(const std::array<double, 3>& theta, int k) {
  std::array<double, 3> out{};
  for (int j = 0; j < 3; ++j) {
    if (j == k) continue;
    const std::complex<double> d = std::polar(1.0, theta[j]) - std::polar(1.0, theta[k]);
    out[j] = std::arg(d) - theta[k];
  }
  return out;
}

// Slots (a12, a13, a23) of a triangle with vertex angles theta.
std::array<double, 3> slots(const std::array<double, 3>& theta) {
  return {theta[1] - theta[0], theta[2] - theta[0], theta[2] - theta[1]};
}

bool is_rational_on_circle_numerically(double angle) {
  auto near_rational = [](double x) {
    for (int b = 1; b <= 100; ++b) {
      if (std::fabs(x * b - std::round(x * b)) < 1e-9) return true;
    }
    return false;
  };
  return near_rational(std::cos(angle)) && near_rational(std::sin(angle));
}

ReplacementProblem problem(const std::vector<CirclePoint>& positions,
                           const std::vector<Multiplicity>& mults) {
  return {positions, mults};
}

std::vector<Network> admissible_samples() {
  std::vector<Network> out{line_network(2), tk::rectangle_network(), tk::small_triangle_network()};
  for (int k = 0; k < 4; ++k) out.push_back(tk::n3_network(tk::random_n3_instance(6)));
  return out;
}

}  // namespace

TEST(AngleExpr, Formatting) {
  EXPECT_EQ(AngleExpr::pi(make_rational(3, 4)).str(), "(3/4)·π");
  EXPECT_EQ(AngleExpr().str(), "0");
  EXPECT_EQ(a12.str(), "a12");
  EXPECT_EQ((a12 - a12).str(), "0");
  EXPECT_TRUE((a12 - a12).coeffs().empty());
}

TEST(AngleMap, Examples) {
  const auto v = n3_angle_variables();
  const auto twice1 = n3_angle_map(n3_angle_map(v, 1), 1);
  EXPECT_EQ(twice1[0], make_rational(1, 4) * a12 + AngleExpr::pi(make_rational(3, 4)));
  EXPECT_EQ(twice1[1], make_rational(1, 4) * a13 + AngleExpr::pi(make_rational(3, 4)));
  EXPECT_EQ(twice1[2], make_rational(1, 4) * a23);

  const auto twice3 = n3_angle_map(n3_angle_map(v, 3), 3);
  EXPECT_EQ(twice3[0], make_rational(1, 4) * a12);

  const auto once1 = n3_angle_map(v, 1);
  EXPECT_EQ(once1[2].coeffs().at("a23"), make_rational(1, 2));
}

TEST(AngleMap, SumRelation) {
  // a12 + a23 - a13 after substituting a13 = a12 + a23.
  auto defect = [](const AngleTriple& t) {
    const AngleExpr d = t[0] + t[2] - t[1];
    const auto coeff = [&](const char* name) {
      const auto it = d.coeffs().find(name);
      return it == d.coeffs().end() ? Rational(0) : it->second;
    };
    EXPECT_EQ(coeff("a12") + coeff("a13"), 0);
    EXPECT_EQ(coeff("a23") + coeff("a13"), 0);
    return d.pi_coeff();
  };
  // Chains of vertex-1 and vertex-3 steps keep the relation exactly.
  AngleTriple t = n3_angle_variables();
  for (int vertex : {1, 3, 3, 1, 3}) {
    t = n3_angle_map(t, vertex);
    EXPECT_EQ(defect(t), 0);
  }
  // A vertex-2 step moves it by pi.
  EXPECT_EQ(defect(n3_angle_map(n3_angle_variables(), 2)), 1);
}

TEST(AngleMap, MatchesGeometry) {
  auto& rng = random_engine();
  std::uniform_real_distribution<double> angle(0.2, kPi - 0.2);
  for (int trial = 0; trial < 200; ++trial) {
    double x = angle(rng), y = angle(rng);
    if (x + y <= kPi + 0.05) continue;
    std::array<double, 3> theta{0.0, x, x + y};
    AngleTriple t = n3_angle_variables();
    const std::map<std::string, double> at{{"a12", x}, {"a13", x + y}, {"a23", y}};
    for (int step = 0; step < 4; ++step) {
      const int vertex = std::bernoulli_distribution(0.5)(rng) ? 1 : 3;
      theta = geometric_step(theta, vertex - 1);
      t = n3_angle_map(t, vertex);
      const auto s = slots(theta);
      for (int k = 0; k < 3; ++k) EXPECT_LT(mod_two_pi_distance(t[k].evaluate(at), s[k]), 1e-12);
    }
  }
}

TEST(AngleMap, VertexTwoOppositeSlotIsOffByPi) {
  // Geometrically the a13 slot after a vertex-2 step is a13/2 + pi; the map
  // keeps the halving rule, which agrees up to the sign of the point.
  const double x = 2.0, y = 1.8;
  const auto theta = geometric_step({0.0, x, x + y}, 1);
  const auto t = n3_angle_map(n3_angle_variables(), 2);
  const std::map<std::string, double> at{{"a12", x}, {"a13", x + y}, {"a23", y}};
  const auto s = slots(theta);
  EXPECT_LT(mod_two_pi_distance(t[0].evaluate(at), s[0]), 1e-12);
  EXPECT_LT(mod_two_pi_distance(t[1].evaluate(at) + kPi, s[1]), 1e-12);
  EXPECT_LT(mod_two_pi_distance(t[2].evaluate(at), s[2]), 1e-12);
}

TEST(RationalPoint, Examples) {
  EXPECT_EQ(rational_point_of_expr(AngleExpr::pi(make_rational(3, 4))),
            RationalPointClass::forced_irrational);
  EXPECT_EQ(rational_point_of_expr(AngleExpr::pi()), RationalPointClass::forced_rational);
  EXPECT_EQ(rational_point_of_expr(make_rational(1, 4) * a12),
            RationalPointClass::depends_on_variables);
  EXPECT_EQ(to_string(RationalPointClass::forced_irrational), "forced-irrational");
}

TEST(RationalPoint, AgreesWithBruteForce) {
  for (long q = 1; q <= 100; ++q) {
    for (long p = -2 * q; p <= 2 * q; ++p) {
      const Rational r = make_rational(p, q);
      const bool expected = is_rational_on_circle_numerically(r.get_d() * kPi);
      const auto got = rational_point_of_expr(AngleExpr::pi(r));
      EXPECT_EQ(got == RationalPointClass::forced_rational, expected) << p << "/" << q;
    }
  }
}

TEST(Certificate, RefutesTriangles) {
  const auto verdict = certify_no_good_n3();
  EXPECT_EQ(verdict.status, AuditStatus::refuted);
  EXPECT_EQ(verdict.depth, 2);
  ASSERT_TRUE(verdict.witness_expr);
  EXPECT_EQ(*verdict.witness_expr, AngleExpr::pi(make_rational(3, 4)));
  EXPECT_NE(verdict.detail.find("(3/4)·π is not a rational point"), std::string::npos);
}

TEST(Certificate, IdenticalChainsCancel) {
  const auto v = n3_angle_variables();
  const auto chain = n3_angle_map(n3_angle_map(v, 1), 1);
  const AngleExpr diff = chain[0] - chain[0];
  EXPECT_EQ(diff, AngleExpr());
  EXPECT_EQ(rational_point_of_expr(diff), RationalPointClass::forced_rational);
}

TEST(ReplacementProblem, LineIsAFixedPoint) {
  for (Multiplicity m : {1, 2, 5}) {
    const auto p = replacement_problem(line_network(m), 0);
    ASSERT_EQ(p.positions.size(), 2u);
    EXPECT_DOUBLE_EQ(p.positions[0].angle(), 0.0);
    EXPECT_DOUBLE_EQ(p.positions[1].angle(), kPi);
    EXPECT_EQ(p.exterior_mults, (std::vector<Multiplicity>{m, m}));
    EXPECT_TRUE(p.exact());
    const auto replacement = replacement_feasible(p, 10);
    ASSERT_TRUE(replacement);
    EXPECT_EQ(*replacement, line_network(m));
  }
}

TEST(ReplacementProblem, TriangleVertexOne) {
  for (int k = 0; k < 20; ++k) {
    const auto inst = tk::random_n3_instance();
    const Network net = tk::n3_network(inst);
    const double x = inst.positions[1].angle(), z = inst.positions[2].angle();
    const auto p = replacement_problem(net, 0);
    ASSERT_EQ(p.positions.size(), 3u);
    EXPECT_NEAR(p.positions[0].angle(), 0.0, 1e-12);
    EXPECT_NEAR(p.positions[1].angle(), (x + kPi) / 2, 1e-12);
    EXPECT_NEAR(p.positions[2].angle(), (z + kPi) / 2, 1e-12);
    EXPECT_EQ(p.exterior_mults[0], net.vertex(0).exterior_mult);
    EXPECT_EQ(p.exterior_mults[1], net.edge(0).mult);  // m12
    EXPECT_EQ(p.exterior_mults[2], net.edge(1).mult);  // m13
  }
}

TEST(ReplacementProblem, IsolatedVertex) {
  const Network net = make_network({{CirclePoint::from_tan_half(Surd(0)), 1},
                                    {CirclePoint::from_tan_half(Surd(1)), 1},
                                    {CirclePoint::at_pi(), 1}},
                                   {{0, 2, 1}});
  EXPECT_THROW(replacement_problem(net, 1), IsolatedVertex);
}

TEST(ReplacementSearch, NegativeExamples) {
  const auto root3 = CirclePoint::from_tan_half(Surd::radical(3));
  const auto minus_root3 = CirclePoint::from_tan_half(Surd::radical(3, -1));
  const auto equilateral = problem({CirclePoint::from_tan_half(Surd(0)), root3, minus_root3}, {1, 1, 1});
  EXPECT_FALSE(replacement_feasible(equilateral, 20));
  EXPECT_NE(search_replacements(equilateral, 20).outcome, SearchOutcome::found);

  const auto unbalanced = problem({CirclePoint::from_tan_half(Surd(0)), CirclePoint::at_pi()}, {1, 2});
  EXPECT_FALSE(replacement_feasible(unbalanced, 20));

  const auto floats = problem({CirclePoint::from_angle(0), CirclePoint::from_angle(kPi)}, {1, 1});
  EXPECT_EQ(search_replacements(floats, 5).outcome, SearchOutcome::undecidable);
}

TEST(ReplacementSearch, EveryReplacementIsAdmissible) {
  for (const auto& net : admissible_samples()) {
    for (std::size_t i = 0; i < net.vertex_count(); ++i) {
      const auto p = replacement_problem(net, i);
      if (!p.exact()) continue;
      const auto search = search_replacements(p, 30, 32);
      for (const auto& r : search.replacements) {
        EXPECT_TRUE(check_admissible(r, Mode::exact).admissible());
        EXPECT_EQ(tk::global_identity_failure(r), "");
        // Boundary data: exterior weights as prescribed.
        for (std::size_t k = 0; k < r.vertex_count(); ++k) {
          EXPECT_EQ(r.vertex(k).exterior_mult, p.exterior_mults[k]);
        }
      }
    }
  }
}

TEST(Audit, LineIsGoodToDepthFour) {
  const auto verdict = good_network_audit(line_network(3), 4, 20);
  EXPECT_EQ(verdict.status, AuditStatus::good);
  EXPECT_EQ(verdict.depth, 4);
  EXPECT_EQ(to_string(verdict.status), "good");
}

TEST(Audit, TrianglesAndQuadrilateralsAreRefuted) {
  std::vector<Network> nets{tk::small_triangle_network(), tk::rectangle_network()};
  for (int k = 0; k < 3; ++k) nets.push_back(tk::n3_network(tk::random_n3_instance(6)));
  if (auto four = tk::random_admissible_n4(6, 40, 20)) nets.push_back(*four);
  for (const auto& net : nets) {
    const auto verdict = good_network_audit(net, 2, 20);
    EXPECT_EQ(verdict.status, AuditStatus::refuted) << verdict.detail;
    EXPECT_LE(verdict.depth, 2);
    ASSERT_TRUE(verdict.witness);
    ASSERT_FALSE(verdict.chain.empty());
    EXPECT_EQ(verdict.chain.front(), net);
    // The witness really has no replacement within the bound.
    EXPECT_FALSE(replacement_feasible(*verdict.witness, verdict.bound));
  }
}

TEST(Audit, Monotone) {
  for (const auto& net : admissible_samples()) {
    int first_refuted = 0;
    for (int depth = 1; depth <= 3; ++depth) {
      const auto v = good_network_audit(net, depth, 12);
      if (v.status == AuditStatus::refuted && first_refuted == 0) first_refuted = depth;
      if (first_refuted != 0) EXPECT_EQ(v.status, AuditStatus::refuted) << depth;
    }
  }
}

TEST(Audit, NonAntipodalPairsAreNotStationary) {
  // Two vertices: unequal weights or a non-diameter chord never balance.
  for (int k = 0; k < 50; ++k) {
    const Rational t = tk::random_rational(9, 9);
    if (t == 0) continue;
    const auto p = CirclePoint::from_tan_half(Surd(t));
    const Network chord = make_network({{CirclePoint::from_tan_half(Surd(0)), 1}, {p, 1}}, {{0, 1, 1}});
    EXPECT_FALSE(is_stationary(chord, Mode::exact));
  }
  for (Multiplicity a = 1; a <= 4; ++a) {
    for (Multiplicity b = 1; b <= 4; ++b) {
      for (Multiplicity e = 1; e <= 4; ++e) {
        const Network net = make_network(
            {{CirclePoint::from_tan_half(Surd(0)), a}, {CirclePoint::at_pi(), b}}, {{0, 1, e}});
        EXPECT_EQ(is_stationary(net, Mode::exact), a == b && b == e);
      }
    }
  }
}
