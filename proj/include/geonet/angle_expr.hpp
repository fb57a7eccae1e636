#pragma once

#include <array>
#include <map>
#include <string>

#include "geonet/exact.hpp"

namespace geonet {

/// Affine angle sum_k q_k * alpha_k + r * pi over named variables.
class AngleExpr {
 public:
  AngleExpr() = default;
  static AngleExpr variable(const std::string& name);
  static AngleExpr pi(const Rational& r = 1);

  const std::map<std::string, Rational>& coeffs() const { return coeffs_; }
  const Rational& pi_coeff() const { return pi_; }
  bool has_variables() const { return !coeffs_.empty(); }

  AngleExpr operator-() const;
  AngleExpr& operator+=(const AngleExpr& rhs);
  AngleExpr& operator-=(const AngleExpr& rhs) { return *this += -rhs; }
  AngleExpr& operator*=(const Rational& q);
  friend AngleExpr operator+(AngleExpr a, const AngleExpr& b) { return a += b; }
  friend AngleExpr operator-(AngleExpr a, const AngleExpr& b) { return a -= b; }
  friend AngleExpr operator*(const Rational& q, AngleExpr a) { return a *= q; }
  friend bool operator==(const AngleExpr&, const AngleExpr&) = default;

  /// Value at the given variable assignment; throws DomainError when a
  /// variable is missing.
  double evaluate(const std::map<std::string, double>& values) const;

  /// Readable form such as "(1/4)·a12 + (3/4)·π" or "0".
  std::string str() const;

 private:
  std::map<std::string, Rational> coeffs_;  // nonzero entries only
  Rational pi_ = 0;
};

/// Angle differences of a triangle in the slot order (a12, a13, a23).
using AngleTriple = std::array<AngleExpr, 3>;

/// (a12, a13, a23) as plain variables.
AngleTriple n3_angle_variables();

/// Angle differences after replacing vertex 1, 2 or 3: the two slots through
/// the vertex become (x + pi) / 2 and the opposite slot x / 2. The slot
/// labels follow the original vertices, so a vertex-2 step keeps a12 + a23 =
/// a13 only up to pi (the replacement reorders the circle).
AngleTriple n3_angle_map(const AngleTriple& exprs, int vertex);

enum class RationalPointClass { forced_rational, forced_irrational, depends_on_variables };

/// Whether e^{i e} is a rational point of the circle. Without variables this
/// is decided exactly: e^{i r pi} is rational iff 2r is an integer.
RationalPointClass rational_point_of_expr(const AngleExpr& e);

std::string to_string(RationalPointClass c);

}  // namespace geonet
