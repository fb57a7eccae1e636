#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "geonet/circle_point.hpp"
#include "geonet/errors.hpp"
#include "geonet/exact.hpp"
#include "geonet/random.hpp"
#include "support.hpp"

using namespace geonet;

namespace {

// Trial division up to sqrt(n).
std::vector<long> trial_factor(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

Surd random_surd() {
  static const long radicands[] = {1, 2, 3, 5, 6, 7};
  Surd s;
  for (long r : radicands) {
    std::bernoulli_distribution use(0.5);
    if (use(random_engine())) s += Surd::radical(r, testkit::random_rational(9, 9));
  }
  return s;
}

}  // namespace

TEST(PrimeFactors, MatchesTrialDivision) {
  std::uniform_int_distribution<long> dist(2, 2000000);
  for (int k = 0; k < 500; ++k) {
    const long n = dist(random_engine());
    std::vector<Integer> expected;
    for (long p : trial_factor(n)) expected.emplace_back(p);
    EXPECT_EQ(prime_factors(Integer(n)), expected) << n;
  }
}

TEST(PrimeFactors, LargeSemiprime) {
  // 1000003 * 1000033, beyond the trial-division table.
  const Integer n = Integer(1000003) * Integer(1000033);
  EXPECT_EQ(prime_factors(n), (std::vector<Integer>{1000003, 1000033}));
}

TEST(SplitSquare, RecombinesToInput) {
  for (long n = 1; n < 3000; ++n) {
    auto [root, free] = split_square(Integer(n));
    EXPECT_EQ(root * root * free, n);
    for (long p : trial_factor(free.get_si())) EXPECT_NE(free.get_si() % (p * p), 0);
  }
}

TEST(Surd, CanonicalRadicals) {
  EXPECT_EQ(Surd::radical(8), Surd::radical(2, 2));
  EXPECT_EQ(Surd::sqrt_of(make_rational(9, 4)), Surd(make_rational(3, 2)));
  EXPECT_EQ(Surd::radical(2) * Surd::radical(3), Surd::radical(6));
  EXPECT_EQ(Surd::radical(6) * Surd::radical(10), Surd::radical(15, 2));
  EXPECT_TRUE((Surd::radical(2) - Surd::radical(2)).is_zero());
}

TEST(Surd, ArithmeticAgreesWithDoubles) {
  for (int k = 0; k < 300; ++k) {
    const Surd a = random_surd(), b = random_surd();
    EXPECT_NEAR((a + b).to_double(), a.to_double() + b.to_double(), 1e-9);
    EXPECT_NEAR((a * b).to_double(), a.to_double() * b.to_double(), 1e-8);
    if (!b.is_zero()) {
      EXPECT_EQ(b * b.inverse(), Surd(1));
      EXPECT_NEAR((a / b).to_double(), a.to_double() / b.to_double(),
                  1e-7 * (1 + std::fabs(a.to_double() / b.to_double())));
    }
  }
}

TEST(Surd, SignOfNearCancellation) {
  // 140 - 99 sqrt 2 is about -0.0071; 577 - 408 sqrt 2 is about 0.0009.
  EXPECT_EQ((Surd(140) - Surd::radical(2, 99)).sign(), -1);
  EXPECT_EQ((Surd(577) - Surd::radical(2, 408)).sign(), 1);
  EXPECT_EQ(Surd().sign(), 0);
}

TEST(SqrtInClosure, Denesting) {
  // (1 + sqrt 2)^2 = 3 + 2 sqrt 2.
  auto r = sqrt_in_closure(Surd(3) + Surd::radical(2, 2));
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, Surd(1) + Surd::radical(2));
  EXPECT_FALSE(sqrt_in_closure(Surd(1) + Surd::radical(2)));
  EXPECT_FALSE(sqrt_in_closure(Surd(-4)));
  EXPECT_EQ(*sqrt_in_closure(Surd(make_rational(2, 9))), Surd::radical(2, make_rational(1, 3)));
}

TEST(SqrtInClosure, TwistedAndAbsentRoots) {
  // Roots may pick up a new radical: sqrt(4/17) = (2/17) sqrt 17.
  EXPECT_EQ(*sqrt_in_closure(Surd(make_rational(4, 17))), Surd::radical(17, make_rational(2, 17)));
  // sqrt(3 (2 + sqrt 3)) = (3 + sqrt 3) / sqrt 2.
  const Surd twisted = Surd(3) * (Surd(2) + Surd::radical(3));
  EXPECT_EQ(*sqrt_in_closure(twisted), Surd::radical(2, make_rational(3, 2)) + Surd::radical(6, make_rational(1, 2)));
  // 32/13 + (8/13) sqrt 3 has discriminant 832/169, not a rational square.
  EXPECT_FALSE(sqrt_in_closure(Surd(make_rational(32, 13)) + Surd::radical(3, make_rational(8, 13))));
}

TEST(SqrtInClosure, SquaresOfRandomElements) {
  for (int k = 0; k < 60; ++k) {
    Surd y = random_surd();
    if (y.sign() < 0) y = -y;
    auto r = sqrt_in_closure(y * y);
    ASSERT_TRUE(r) << y.str();
    EXPECT_EQ(*r, y) << y.str();
  }
}

TEST(SqrtClassifier, GroupsBySquareClass) {
  SqrtClassifier c;
  auto a = c.classify(Surd(2));
  auto b = c.classify(Surd(8));
  auto d = c.classify(Surd(1) + Surd::radical(2));
  auto e = c.classify(Surd(4));
  EXPECT_EQ(e.group, 0u);
  EXPECT_EQ(e.ratio, Surd(2));
  EXPECT_EQ(a.group, 0u);  // sqrt 2 already lies in the closure
  EXPECT_EQ(b.ratio, Surd::radical(2, 2));
  EXPECT_NE(d.group, 0u);
  auto f = c.classify((Surd(1) + Surd::radical(2)) * Surd(9));
  EXPECT_EQ(f.group, d.group);
  EXPECT_EQ(f.ratio, Surd(3));
}

TEST(CirclePoint, RationalParameterGivesUnitVector) {
  for (int k = 0; k < 200; ++k) {
    const Rational t = testkit::random_rational(10, 10);
    const auto p = CirclePoint::from_tan_half(Surd(t));
    const auto& e = p.exact();
    EXPECT_EQ(e.x * e.x + e.y * e.y, Surd(1));
    EXPECT_NEAR(p.angle(), normalize_angle(2 * std::atan(t.get_d())), 1e-12);
  }
}

TEST(CirclePoint, AtPiAndRotation) {
  const auto pi = CirclePoint::at_pi();
  EXPECT_EQ(pi.exact().x, Surd(-1));
  EXPECT_DOUBLE_EQ(pi.angle(), kPi);
  const auto q = CirclePoint::from_tan_half(Surd(1));  // angle pi/2
  const auto r = pi.rotated_back(q);                   // angle pi/2
  EXPECT_TRUE(r.same_point(q));
  EXPECT_THROW(CirclePoint::from_exact_coords(Surd(1), Surd(1)), ArithmeticError);
  EXPECT_THROW(CirclePoint::from_angle(1.0).exact(), ExactDataMissing);
}

TEST(CirclePoint, SurdParameter) {
  // tan(pi/3) = sqrt 3 gives angle 2 pi / 3.
  const auto p = CirclePoint::from_tan_half(Surd::radical(3));
  EXPECT_EQ(p.exact().x, Surd(make_rational(-1, 2)));
  EXPECT_EQ(p.exact().y, Surd::radical(3, make_rational(1, 2)));
  EXPECT_NEAR(p.angle(), 2 * kPi / 3, 1e-12);
}
