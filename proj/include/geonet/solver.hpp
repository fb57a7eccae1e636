#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "geonet/circle_point.hpp"
#include "geonet/combinatorics.hpp"
#include "geonet/network.hpp"
#include "geonet/rational_matrix.hpp"

namespace geonet {

/// Exact linear system whose solutions are the stationary weightings of a
/// chord structure on given circle points.
///
/// Columns are (m_0 .. m_{N-1}, m_e0 .. m_e{E-1}); rows come from
/// stationarity_rows. The row count is 2N only when every chord length is
/// rational: irrational lengths split each coordinate into one row per
/// square class.
struct StationaritySystem {
  RationalMatrix matrix;
  std::vector<CirclePoint> positions;
  std::vector<EdgeIndexPair> edges;
  /// When present, the exterior weights are data rather than unknowns.
  std::optional<std::vector<Rational>> fixed_exterior;

  std::size_t vertex_count() const { return positions.size(); }
  std::size_t unknown_count() const { return positions.size() + edges.size(); }
};

/// Throws InexactPosition for float-only positions, CrossingEdges when two
/// chords cross in the cyclic order of the positions, IndexOutOfRange and
/// DuplicateVertexAngle for malformed input.
StationaritySystem build_system(const std::vector<CirclePoint>& positions,
                                const std::vector<EdgeIndexPair>& edges,
                                std::optional<std::vector<Rational>> fixed_exterior = std::nullopt);
StationaritySystem build_system(const std::vector<CirclePoint>& positions, const ChordSet& edges,
                                std::optional<std::vector<Rational>> fixed_exterior = std::nullopt);

/// Solution set of a StationaritySystem, always expressed in the full
/// (N + E)-dimensional unknown space.
///
/// Without fixed exterior weights the solutions are the span of
/// kernel_basis and particular is the zero vector. With fixed weights the
/// solutions are particular + span(kernel_basis), where the kernel vectors
/// vanish on the exterior slots; particular is absent when the system is
/// inconsistent.
struct SolveResult {
  std::vector<std::vector<Integer>> kernel_basis;  // coprime, leading entry positive
  std::optional<std::vector<Rational>> particular;
  std::size_t rank = 0;

  // Parametrization used by the lattice search: the unknowns in free_columns
  // are independent and every pivot unknown is
  //   pivot_values[k] - sum_f pivot_coeffs[k][f] * x[free_columns[f]].
  std::vector<std::size_t> free_columns;
  std::vector<std::size_t> pivot_columns;
  std::vector<Rational> pivot_values;
  std::vector<std::vector<Rational>> pivot_coeffs;
  std::size_t unknowns = 0;
};

/// Fraction-free elimination (Bareiss) followed by exact back substitution.
SolveResult solve(const StationaritySystem& system);

/// Kernel and particular solution of A x = b for an arbitrary exact matrix.
SolveResult solve_linear(const RationalMatrix& a, const std::vector<Rational>& b);

/// Every solution whose unknown entries are integers in [1, M], in
/// lexicographic order. Fixed exterior slots are reported as given.
std::vector<std::vector<Integer>> positive_integer_solutions(const SolveResult& result,
                                                             long bound);

/// Network built from a system and one of its solutions.
Network network_from_solution(const StationaritySystem& system,
                              const std::vector<Integer>& solution);

// N = 3.
//
// Vertices v1 = 1, v2 = e^{i a12}, v3 = e^{i a13} with a13 = a12 + a23, where
// the inputs are the points e^{i a12} and e^{i a23}. Edge weights are
// ordered (m12, m13, m23) and exterior weights (m1, m2, m3).

struct N3ClosedForms {
  Surd c12, s12, c23, s23, c13, s13;  // cos and sin of the half angles
  /// (c13 c23, -c12 c23, c12 c13); the edge weights are beta times this.
  std::array<Surd, 3> edge;
  /// (c23 s23, -c13 s13, c12 s12); the exterior weights are -beta times this.
  std::array<Surd, 3> exterior;
  /// m1 m23 / (m12 m13), m2 m13 / (m12 m23), m3 m12 / (m13 m23), which
  /// equal tan(a23/2), -tan(a13/2) and tan(a12/2).
  std::array<Surd, 3> quotients;
  /// Every tan(a_jk / 2) is rational.
  bool rational = false;
};

/// Throws DomainError unless a12, a23 lie in (0, pi) and a13 in (pi, 2 pi);
/// ExactDataMissing for float-only input; ArithmeticError when a half-angle
/// cosine leaves the multiquadratic closure.
N3ClosedForms n3_closed_forms(const CirclePoint& p12, const CirclePoint& p23);

/// The three vertices (1, e^{i a12}, e^{i a13}), exact when the inputs are.
std::array<CirclePoint, 3> n3_positions(const CirclePoint& p12, const CirclePoint& p23);

/// The imaginary-part matrix C and the real-part matrix of the N = 3 system,
/// acting on (m12, m13, m23). Both need rational half-angle cosines and sines
/// and throw ArithmeticError otherwise.
RationalMatrix imaginary_part_matrix(const CirclePoint& p12, const CirclePoint& p23);
RationalMatrix real_part_matrix(const CirclePoint& p12, const CirclePoint& p23);

/// Point e^{i a} with tan(a / 4) = u, so that cos(a/2) and sin(a/2) are
/// rational: the natural source of exact N = 3 instances with rational C.
CirclePoint point_from_quarter_tangent(const Rational& u);

}  // namespace geonet
