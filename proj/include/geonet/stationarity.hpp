#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "geonet/network.hpp"
#include "geonet/rational_matrix.hpp"

namespace geonet {

enum class Mode { exact, floating };

/// Float tolerance used when none is given; scaled by max(1, total weight).
inline constexpr double kDefaultTolerance = 1e-9;

/// m_v v + sum_w m_vw (w - v) / |w - v| at vertex i, as doubles. Computed
/// from exact coordinates whenever every involved position is exact and every
/// chord length lies in the multiquadratic closure.
Eigen::Vector2d stationarity_residual(const Network& net, std::size_t i);

/// Exact residual at vertex i, when it is representable.
std::optional<SurdVec2> exact_stationarity_residual(const Network& net, std::size_t i);

/// Exact mode: every vertex equation vanishes identically (throws
/// ExactDataMissing if some position is float-only). Float mode: every
/// residual norm is at most tol * max(1, total weight).
bool is_stationary(const Network& net, Mode mode, double tol = kDefaultTolerance);

/// Pairs of edge indices whose open chords cross. Decided from the cyclic
/// order alone.
std::vector<EdgeIndexPair> crossing_pairs(const Network& net);

/// True when chords (a, b) and (c, d) on cyclically ordered points cross.
bool chords_cross(std::size_t a, std::size_t b, std::size_t c, std::size_t d);

struct Finding {
  std::string tag;
  std::string detail;
};

struct ValidationReport {
  bool stationary = false;
  double max_residual = 0.0;
  std::vector<EdgeIndexPair> crossings;
  std::vector<Finding> violations;

  bool admissible() const { return stationary && crossings.empty(); }
};

ValidationReport check_admissible(const Network& net, Mode mode,
                                  double tol = kDefaultTolerance);

enum class Parity { even, odd };

struct InvariantReport {
  Eigen::Vector2d exterior_balance = Eigen::Vector2d::Zero();
  double mass_gap = 0.0;
  Parity exterior_parity = Parity::even;
  // Exact verdicts, present when every position is exact.
  std::optional<bool> balance_vanishes;
  std::optional<bool> mass_gap_vanishes;
};

/// Global quantities: sum_v m_v v, sum_v m_v - sum_e m_e |v - w|, and the
/// parity of sum_v m_v.
InvariantReport invariant_report(const Network& net);

/// Exact linearization of the stationarity conditions.
///
/// Unknowns are (m_0 .. m_{N-1}, m_e0 .. m_e{E-1}). Each vertex equation is a
/// vector identity in the multiquadratic closure extended by the chord
/// lengths; splitting it along the chord-length classes of SqrtClassifier,
/// the two coordinates and the basis radicals yields one rational row per
/// component. A weight vector is a stationary assignment iff every row
/// vanishes on it. Throws ExactDataMissing for float-only positions.
RationalMatrix stationarity_rows(const std::vector<CirclePoint>& positions,
                                 const std::vector<EdgeIndexPair>& edges);

}  // namespace geonet
