#pragma once

// Exact scalars used by the stationarity machinery.
//
// Positions on the unit circle are rational points in the simplest case, but
// the unit tangent (w - v) / |w - v| between two rational points is in general
// not rational: |w - v| is the square root of a rational. Iterated tangents
// pick up further square roots. Everything the library needs to compute
// exactly therefore lives in the multiquadratic closure of Q, the field
// generated by square roots of positive rationals. `Surd` represents an
// element of that field in the canonical basis {sqrt(s) : s squarefree}.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace geonet {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(long numerator, long denominator = 1);

/// Distinct prime factors of |n|, ascending. n must be nonzero.
std::vector<Integer> prime_factors(const Integer& n);

/// Writes n > 0 as root^2 * squarefree.
std::pair<Integer, Integer> split_square(const Integer& n);

/// Finite sum  q_1 sqrt(s_1) + ... + q_k sqrt(s_k)  with rational q_i and
/// distinct squarefree positive s_i. The representation is canonical, so
/// structural equality is numeric equality.
class Surd {
 public:
  Surd() = default;
  Surd(long value);  // NOLINT(google-explicit-constructor)
  Surd(const Rational& value);  // NOLINT(google-explicit-constructor)

  /// coeff * sqrt(radicand) for any positive integer radicand.
  static Surd radical(const Integer& radicand, const Rational& coeff = 1);
  /// Nonnegative square root of a nonnegative rational.
  static Surd sqrt_of(const Rational& value);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// Throws ArithmeticError unless is_rational().
  Rational to_rational() const;
  double to_double() const;
  /// Exact sign: -1, 0 or +1.
  int sign() const;

  const std::map<Integer, Rational>& terms() const { return terms_; }
  /// Primes dividing some radicand.
  std::vector<Integer> primes() const;

  /// Field automorphism sending sqrt(p) to -sqrt(p) for the prime p.
  Surd conjugate(const Integer& p) const;
  /// Throws ArithmeticError on zero.
  Surd inverse() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& rhs);
  Surd& operator-=(const Surd& rhs);
  Surd& operator*=(const Surd& rhs);
  Surd& operator/=(const Surd& rhs) { return *this *= rhs.inverse(); }

  friend Surd operator+(Surd lhs, const Surd& rhs) { return lhs += rhs; }
  friend Surd operator-(Surd lhs, const Surd& rhs) { return lhs -= rhs; }
  friend Surd operator*(const Surd& lhs, const Surd& rhs);
  friend Surd operator/(const Surd& lhs, const Surd& rhs) {
    return lhs * rhs.inverse();
  }
  friend bool operator==(const Surd& lhs, const Surd& rhs) {
    return lhs.terms_ == rhs.terms_;
  }
  friend bool operator!=(const Surd& lhs, const Surd& rhs) {
    return !(lhs == rhs);
  }

  /// Human readable form, e.g. "1/2 + 3/4*sqrt(2)".
  std::string str() const;

 private:
  void add_term(const Integer& radicand, const Rational& coeff);

  std::map<Integer, Rational> terms_;
};

/// Nonnegative square root of x inside the multiquadratic closure, or nullopt
/// when x is negative or its root is not multiquadratic (e.g. sqrt(1 + sqrt 2)).
std::optional<Surd> sqrt_in_closure(const Surd& x);

/// Pair of exact coordinates.
struct SurdVec2 {
  Surd x;
  Surd y;

  friend SurdVec2 operator+(const SurdVec2& a, const SurdVec2& b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend SurdVec2 operator-(const SurdVec2& a, const SurdVec2& b) {
    return {a.x - b.x, a.y - b.y};
  }
  friend SurdVec2 operator*(const Surd& s, const SurdVec2& v) {
    return {s * v.x, s * v.y};
  }
  friend bool operator==(const SurdVec2& a, const SurdVec2& b) {
    return a.x == b.x && a.y == b.y;
  }
  Surd norm_squared() const { return x * x + y * y; }
  bool is_zero() const { return x.is_zero() && y.is_zero(); }
};

/// Sorts square roots of positive closure elements into classes.
///
/// sqrt(a) and sqrt(b) share a class when a / b is a square in the closure.
/// Class 0 is the closure itself (representative 1). Square roots from
/// distinct classes are linearly independent over the closure, so a linear
/// relation among them splits into one relation per class; that is what
/// turns stationarity into a purely rational system.
class SqrtClassifier {
 public:
  struct Placement {
    std::size_t group;
    Surd ratio;  // sqrt(value) == ratio * sqrt(representative(group))
  };

  SqrtClassifier() : reps_{Surd(1)} {}

  /// value must be positive.
  Placement classify(const Surd& value);

  std::size_t group_count() const { return reps_.size(); }
  const Surd& representative(std::size_t group) const { return reps_.at(group); }

 private:
  std::vector<Surd> reps_;
};

}  // namespace geonet
