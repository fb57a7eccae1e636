#include "geonet/angle_expr.hpp"

#include <sstream>

#include "geonet/circle_point.hpp"
#include "geonet/errors.hpp"

namespace geonet {

AngleExpr AngleExpr::variable(const std::string& name) {
  AngleExpr e;
  e.coeffs_[name] = 1;
  return e;
}

AngleExpr AngleExpr::pi(const Rational& r) {
  AngleExpr e;
  e.pi_ = r;
  return e;
}

AngleExpr AngleExpr::operator-() const {
  AngleExpr e = *this;
  for (auto& [name, q] : e.coeffs_) q = -q;
  e.pi_ = -e.pi_;
  return e;
}

AngleExpr& AngleExpr::operator+=(const AngleExpr& rhs) {
  for (const auto& [name, q] : rhs.coeffs_) {
    Rational& slot = coeffs_[name];
    slot += q;
    if (slot == 0) coeffs_.erase(name);
  }
  pi_ += rhs.pi_;
  return *this;
}

AngleExpr& AngleExpr::operator*=(const Rational& q) {
  if (q == 0) {
    coeffs_.clear();
    pi_ = 0;
    return *this;
  }
  for (auto& [name, c] : coeffs_) c *= q;
  pi_ *= q;
  return *this;
}

double AngleExpr::evaluate(const std::map<std::string, double>& values) const {
  double total = pi_.get_d() * kPi;
  for (const auto& [name, q] : coeffs_) {
    auto it = values.find(name);
    if (it == values.end()) throw DomainError("no value for angle variable " + name);
    total += q.get_d() * it->second;
  }
  return total;
}

namespace {

std::string term(const Rational& q, const std::string& symbol) {
  if (q == 1) return symbol;
  if (q == -1) return "-" + symbol;
  if (q.get_den() == 1) return q.get_str() + "·" + symbol;
  return "(" + q.get_str() + ")·" + symbol;
}

}  // namespace

std::string AngleExpr::str() const {
  std::vector<std::string> parts;
  for (const auto& [name, q] : coeffs_) parts.push_back(term(q, name));
  if (pi_ != 0) parts.push_back(term(pi_, "π"));
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k == 0) {
      os << parts[k];
    } else if (parts[k][0] == '-') {
      os << " - " << parts[k].substr(1);
    } else {
      os << " + " << parts[k];
    }
  }
  return os.str();
}

AngleTriple n3_angle_variables() {
  return {AngleExpr::variable("a12"), AngleExpr::variable("a13"), AngleExpr::variable("a23")};
}

AngleTriple n3_angle_map(const AngleTriple& exprs, int vertex) {
  // Slot k of (a12, a13, a23) passes through vertex `vertex`?
  static constexpr bool through[3][3] = {
      {true, true, false},   // vertex 1: a12, a13
      {true, false, true},   // vertex 2: a12, a23
      {false, true, true},   // vertex 3: a13, a23
  };
  if (vertex < 1 || vertex > 3) throw DomainError("vertex must be 1, 2 or 3");
  const Rational half(1, 2);
  AngleTriple out;
  for (int k = 0; k < 3; ++k) {
    out[k] = through[vertex - 1][k] ? half * (exprs[k] + AngleExpr::pi())
                                     : half * exprs[k];
  }
  return out;
}

RationalPointClass rational_point_of_expr(const AngleExpr& e) {
  if (e.has_variables()) return RationalPointClass::depends_on_variables;
  const Rational twice = 2 * e.pi_coeff();
  return twice.get_den() == 1 ? RationalPointClass::forced_rational
                              : RationalPointClass::forced_irrational;
}

std::string to_string(RationalPointClass c) {
  switch (c) {
    case RationalPointClass::forced_rational:
      return "forced-rational";
    case RationalPointClass::forced_irrational:
      return "forced-irrational";
    case RationalPointClass::depends_on_variables:
      return "depends-on-variables";
  }
  return "";
}

}  // namespace geonet
