#include "geonet/solver.hpp"

#include <algorithm>
#include <numeric>

#include "geonet/errors.hpp"
#include "geonet/stationarity.hpp"

namespace geonet {

namespace {

Integer lcm_of_denominators(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& q : row) l = lcm(l, q.get_den());
  return l;
}

// Scales a rational vector to coprime integers with the first nonzero entry
// positive.
std::vector<Integer> primitive(const std::vector<Rational>& v) {
  const Integer l = lcm_of_denominators(v);
  std::vector<Integer> out;
  out.reserve(v.size());
  Integer g = 0;
  for (const auto& q : v) {
    Rational scaled = q * l;
    out.push_back(scaled.get_num());
    g = gcd(g, out.back());
  }
  if (g == 0) return out;
  int lead = 0;
  for (const auto& z : out) {
    if (z != 0) {
      lead = sgn(z);
      break;
    }
  }
  for (auto& z : out) {
    z /= g;
    if (lead < 0) z = -z;
  }
  return out;
}

CirclePoint product(const CirclePoint& a, const CirclePoint& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto& p = a.exact();
    const auto& q = b.exact();
    return CirclePoint::from_exact_coords(p.x * q.x - p.y * q.y, p.x * q.y + p.y * q.x);
  }
  return CirclePoint::from_angle(a.angle() + b.angle());
}

struct HalfAngle {
  Surd c, s;
};

// cos and sin of theta / 2 for theta in [0, 2 pi), from the exact point.
HalfAngle half_angle(const CirclePoint& p) {
  const auto& e = p.exact();
  if (e.at_pi()) return {Surd(0), Surd(1)};
  const Surd& t = *e.tan_half;
  auto root = sqrt_in_closure(Surd(1) + t * t);
  if (!root) throw ArithmeticError("half-angle cosine leaves the closure");
  Surd c = root->inverse();
  if (t.sign() < 0) c = -c;
  return {c, t * c};
}

}  // namespace

StationaritySystem build_system(const std::vector<CirclePoint>& positions,
                                const std::vector<EdgeIndexPair>& edges,
                                std::optional<std::vector<Rational>> fixed_exterior) {
  const std::size_t n = positions.size();
  for (const auto& p : positions) {
    if (!p.is_exact()) throw InexactPosition("build_system needs exact positions");
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (positions[a].same_point(positions[b])) {
        throw DuplicateVertexAngle("two positions coincide");
      }
    }
  }
  if (fixed_exterior && fixed_exterior->size() != n) {
    throw IndexOutOfRange("fixed exterior weights do not match the positions");
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return positions[a].angle() < positions[b].angle();
  });
  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = k;
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) throw IndexOutOfRange("edge endpoint out of range");
    if (a == b) throw SelfLoopEdge("edge joins a vertex to itself");
  }
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      const auto [a, b] = edges[e];
      const auto [c, d] = edges[f];
      if ((a == c && b == d) || (a == d && b == c)) throw DuplicateEdge("duplicate edge");
      if (chords_cross(rank[a], rank[b], rank[c], rank[d])) {
        throw CrossingEdges("edges cross");
      }
    }
  }
  StationaritySystem system;
  system.matrix = stationarity_rows(positions, edges);
  system.positions = positions;
  system.edges = edges;
  system.fixed_exterior = std::move(fixed_exterior);
  return system;
}

StationaritySystem build_system(const std::vector<CirclePoint>& positions, const ChordSet& edges,
                                std::optional<std::vector<Rational>> fixed_exterior) {
  if (edges.n() != positions.size()) throw IndexOutOfRange("chord set size mismatch");
  return build_system(positions, edges.chords(), std::move(fixed_exterior));
}

SolveResult solve_linear(const RationalMatrix& a, const std::vector<Rational>& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw ArithmeticError("right-hand side length mismatch");

  // Integer augmented matrix, each row cleared of denominators.
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Rational> row(cols + 1);
    for (std::size_t c = 0; c < cols; ++c) row[c] = a(r, c);
    row[cols] = b[r];
    const Integer l = lcm_of_denominators(row);
    for (std::size_t c = 0; c <= cols; ++c) {
      Rational scaled = row[c] * l;
      m[r][c] = scaled.get_num();
    }
  }

  // Bareiss forward elimination: every division below is exact.
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j <= cols; ++j) {
        Integer num = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        Integer q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw ArithmeticError("inexact Bareiss division");
        m[i][j] = q;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    pivots.push_back(c);
    ++r;
  }

  SolveResult result;
  result.rank = pivots.size();
  result.unknowns = cols;
  bool consistent = true;
  for (std::size_t i = result.rank; i < rows; ++i) {
    if (m[i][cols] != 0) consistent = false;
  }

  // Back substitution to reduced row echelon form over the rationals.
  std::vector<std::vector<Rational>> rref(result.rank, std::vector<Rational>(cols + 1));
  for (std::size_t k = 0; k < result.rank; ++k) {
    for (std::size_t j = 0; j <= cols; ++j) rref[k][j] = Rational(m[k][j]);
  }
  for (std::size_t k = result.rank; k-- > 0;) {
    const std::size_t pc = pivots[k];
    const Rational inv = 1 / rref[k][pc];
    for (auto& q : rref[k]) q *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = rref[i][pc];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) rref[i][j] -= f * rref[k][j];
    }
  }

  std::vector<bool> is_pivot(cols, false);
  for (std::size_t pc : pivots) is_pivot[pc] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) result.free_columns.push_back(c);
  }
  result.pivot_columns = pivots;
  for (std::size_t k = 0; k < result.rank; ++k) {
    result.pivot_values.push_back(rref[k][cols]);
    std::vector<Rational> coeffs;
    for (std::size_t f : result.free_columns) coeffs.push_back(rref[k][f]);
    result.pivot_coeffs.push_back(std::move(coeffs));
  }
  for (std::size_t fi = 0; fi < result.free_columns.size(); ++fi) {
    std::vector<Rational> v(cols);
    v[result.free_columns[fi]] = 1;
    for (std::size_t k = 0; k < result.rank; ++k) v[pivots[k]] = -result.pivot_coeffs[k][fi];
    result.kernel_basis.push_back(primitive(v));
  }
  if (consistent) {
    std::vector<Rational> x(cols);
    for (std::size_t k = 0; k < result.rank; ++k) x[pivots[k]] = result.pivot_values[k];
    result.particular = std::move(x);
  }
  return result;
}

SolveResult solve(const StationaritySystem& system) {
  const std::size_t n = system.vertex_count();
  const std::size_t total = system.unknown_count();
  const RationalMatrix& a = system.matrix;
  if (!system.fixed_exterior) {
    return solve_linear(a, std::vector<Rational>(a.rows()));
  }
  // Move the exterior columns to the right-hand side.
  const std::size_t e = system.edges.size();
  RationalMatrix reduced(a.rows(), e);
  std::vector<Rational> rhs(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < e; ++c) reduced(r, c) = a(r, n + c);
    for (std::size_t v = 0; v < n; ++v) rhs[r] -= a(r, v) * (*system.fixed_exterior)[v];
  }
  SolveResult inner = solve_linear(reduced, rhs);

  // Lift to the full unknown space.
  SolveResult out;
  out.rank = inner.rank;
  out.unknowns = total;
  for (const auto& k : inner.kernel_basis) {
    std::vector<Integer> v(n, Integer(0));
    v.insert(v.end(), k.begin(), k.end());
    out.kernel_basis.push_back(std::move(v));
  }
  if (inner.particular) {
    std::vector<Rational> x(system.fixed_exterior->begin(), system.fixed_exterior->end());
    x.insert(x.end(), inner.particular->begin(), inner.particular->end());
    out.particular = std::move(x);
  }
  for (std::size_t f : inner.free_columns) out.free_columns.push_back(n + f);
  for (std::size_t p : inner.pivot_columns) out.pivot_columns.push_back(n + p);
  out.pivot_values = inner.pivot_values;
  out.pivot_coeffs = inner.pivot_coeffs;
  return out;
}

std::vector<std::vector<Integer>> positive_integer_solutions(const SolveResult& result,
                                                             long bound) {
  if (bound < 1) throw DomainError("bound must be at least 1");
  std::vector<std::vector<Integer>> out;
  if (!result.particular) return out;
  const auto& base = *result.particular;

  // Slots that are neither pivot nor free carry fixed data.
  std::vector<bool> solved(result.unknowns, false);
  for (std::size_t c : result.free_columns) solved[c] = true;
  for (std::size_t c : result.pivot_columns) solved[c] = true;
  std::vector<Integer> fixed(result.unknowns, Integer(0));
  for (std::size_t c = 0; c < result.unknowns; ++c) {
    if (solved[c]) continue;
    if (base[c].get_den() != 1) return out;
    fixed[c] = base[c].get_num();
  }

  const std::size_t nf = result.free_columns.size();
  const std::size_t np = result.pivot_columns.size();
  const Rational lo(1), hi(bound);
  std::vector<long> t(nf, 0);

  // Range of pivot k given the first `assigned` free values, the rest free in [1, M].
  auto feasible = [&](std::size_t assigned) {
    for (std::size_t k = 0; k < np; ++k) {
      Rational min = result.pivot_values[k], max = min;
      for (std::size_t f = 0; f < nf; ++f) {
        const Rational& a = result.pivot_coeffs[k][f];
        if (a == 0) continue;
        if (f < assigned) {
          min -= a * t[f];
          max -= a * t[f];
        } else if (a > 0) {
          min -= a * hi;
          max -= a * lo;
        } else {
          min -= a * lo;
          max -= a * hi;
        }
      }
      if (max < lo || min > hi) return false;
      if (assigned == nf && min.get_den() != 1) return false;
    }
    return true;
  };

  std::function<void(std::size_t)> dfs = [&](std::size_t f) {
    if (!feasible(f)) return;
    if (f == nf) {
      std::vector<Integer> x = fixed;
      for (std::size_t i = 0; i < nf; ++i) x[result.free_columns[i]] = t[i];
      for (std::size_t k = 0; k < np; ++k) {
        Rational v = result.pivot_values[k];
        for (std::size_t i = 0; i < nf; ++i) v -= result.pivot_coeffs[k][i] * t[i];
        x[result.pivot_columns[k]] = v.get_num();
      }
      out.push_back(std::move(x));
      return;
    }
    for (long v = 1; v <= bound; ++v) {
      t[f] = v;
      dfs(f + 1);
    }
    t[f] = 0;
  };
  dfs(0);
  std::sort(out.begin(), out.end());
  return out;
}

Network network_from_solution(const StationaritySystem& system,
                              const std::vector<Integer>& solution) {
  const std::size_t n = system.vertex_count();
  if (solution.size() != system.unknown_count()) {
    throw IndexOutOfRange("solution length does not match the system");
  }
  auto as_mult = [](const Integer& z) {
    if (!z.fits_slong_p()) throw ArithmeticError("multiplicity too large");
    return static_cast<Multiplicity>(z.get_si());
  };
  std::vector<Vertex> vertices;
  for (std::size_t v = 0; v < n; ++v) vertices.push_back({system.positions[v], as_mult(solution[v])});
  std::vector<InteriorEdge> edges;
  for (std::size_t e = 0; e < system.edges.size(); ++e) {
    edges.push_back({system.edges[e].first, system.edges[e].second, as_mult(solution[n + e])});
  }
  return make_network(std::move(vertices), std::move(edges));
}

std::array<CirclePoint, 3> n3_positions(const CirclePoint& p12, const CirclePoint& p23) {
  const CirclePoint one =
      p12.is_exact() ? CirclePoint::from_tan_half(Surd(0)) : CirclePoint::from_angle(0.0);
  return {one, p12, product(p12, p23)};
}

N3ClosedForms n3_closed_forms(const CirclePoint& p12, const CirclePoint& p23) {
  if (!p12.is_exact() || !p23.is_exact()) {
    throw ExactDataMissing("closed forms need exact angle data");
  }
  const auto& e12 = p12.exact();
  const auto& e23 = p23.exact();
  if (e12.at_pi() || e23.at_pi()) throw DomainError("angle difference equal to pi");
  if (e12.tan_half->sign() <= 0) throw DomainError("a12 must lie in (0, pi)");
  if (e23.tan_half->sign() <= 0) throw DomainError("a23 must lie in (0, pi)");
  if ((*e12.tan_half * *e23.tan_half - Surd(1)).sign() <= 0) {
    throw DomainError("a13 = a12 + a23 must lie in (pi, 2 pi)");
  }

  N3ClosedForms f;
  const HalfAngle h12 = half_angle(p12), h23 = half_angle(p23);
  f.c12 = h12.c;
  f.s12 = h12.s;
  f.c23 = h23.c;
  f.s23 = h23.s;
  f.c13 = f.c12 * f.c23 - f.s12 * f.s23;
  f.s13 = f.s12 * f.c23 + f.c12 * f.s23;
  f.edge = {f.c13 * f.c23, -(f.c12 * f.c23), f.c12 * f.c13};
  f.exterior = {f.c23 * f.s23, -(f.c13 * f.s13), f.c12 * f.s12};

  // Weights proportional to the closed forms with beta = -1.
  const Surd m1 = f.exterior[0], m2 = f.exterior[1], m3 = f.exterior[2];
  const Surd m12 = -f.edge[0], m13 = -f.edge[1], m23 = -f.edge[2];
  f.quotients = {m1 * m23 / (m12 * m13), m2 * m13 / (m12 * m23), m3 * m12 / (m13 * m23)};
  f.rational = e12.tan_half->is_rational() && e23.tan_half->is_rational();
  return f;
}

namespace {

Rational require_rational(const Surd& s) {
  if (!s.is_rational()) throw ArithmeticError("half-angle value is irrational: " + s.str());
  return s.to_rational();
}

}  // namespace

RationalMatrix imaginary_part_matrix(const CirclePoint& p12, const CirclePoint& p23) {
  const auto f = n3_closed_forms(p12, p23);
  const Rational c12 = require_rational(f.c12), c13 = require_rational(f.c13),
                 c23 = require_rational(f.c23);
  RationalMatrix c(3, 3);
  c(0, 0) = c12;
  c(0, 1) = c13;
  c(1, 0) = -c12;
  c(1, 2) = c23;
  c(2, 1) = -c13;
  c(2, 2) = -c23;
  return c;
}

RationalMatrix real_part_matrix(const CirclePoint& p12, const CirclePoint& p23) {
  const auto f = n3_closed_forms(p12, p23);
  const Rational s12 = require_rational(f.s12), s13 = require_rational(f.s13),
                 s23 = require_rational(f.s23);
  RationalMatrix s(3, 3);
  s(0, 0) = -s12;
  s(0, 1) = -s13;
  s(1, 0) = -s12;
  s(1, 2) = -s23;
  s(2, 1) = -s13;
  s(2, 2) = -s23;
  return s;
}

CirclePoint point_from_quarter_tangent(const Rational& u) {
  // tan(a / 2) = 2u / (1 - u^2).
  const Rational den = 1 - u * u;
  if (den == 0) return CirclePoint::at_pi();
  return CirclePoint::from_tan_half(Surd(Rational(2 * u / den)));
}

}  // namespace geonet
