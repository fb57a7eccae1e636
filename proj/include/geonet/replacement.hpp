#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "geonet/angle_expr.hpp"
#include "geonet/network.hpp"

namespace geonet {

/// Boundary data of a replacement at one vertex: the directions of the rays
/// leaving it (its exterior ray and the unit tangents towards its
/// neighbours), rotated so the exterior ray points along angle 0, with the
/// matching weights. Positions are sorted by angle, the exterior ray first.
struct ReplacementProblem {
  std::vector<CirclePoint> positions;
  std::vector<Multiplicity> exterior_mults;

  /// Every direction has exact coordinates. Tangents leave the exact
  /// representation when a chord length is not in the multiquadratic
  /// closure.
  bool exact() const;
};

/// Throws IsolatedVertex when vertex i has no interior edge.
ReplacementProblem replacement_problem(const Network& net, std::size_t i);

enum class SearchOutcome {
  found,                // a replacement within the bound
  none_any_bound,       // every chord structure is excluded whatever the bound
  none_within_bound,    // nothing in [1, M], larger weights not ruled out
  undecidable,          // positions are not exact
};

struct ReplacementSearch {
  SearchOutcome outcome = SearchOutcome::undecidable;
  /// All replacements found, in enumeration order (first structure first,
  /// solutions lexicographic within a structure), at most `limit` of them.
  std::vector<Network> replacements;
  bool truncated = false;
  unsigned long long structures_tried = 0;
};

/// Searches every non-crossing chord structure on the problem's positions
/// for positive integer edge weights at most M that make it stationary with
/// the given exterior weights.
ReplacementSearch search_replacements(const ReplacementProblem& problem, long bound,
                                      std::size_t limit = 256);

/// First admissible replacement in enumeration order, if any.
std::optional<Network> replacement_feasible(const ReplacementProblem& problem, long bound);

enum class AuditStatus { good, refuted, inconclusive };

struct AuditVerdict {
  AuditStatus status = AuditStatus::inconclusive;
  /// good: depth reached; refuted: replacement level at which it failed.
  int depth = 0;
  long bound = 0;
  /// Refutation relies on the bound M (some structure was excluded only
  /// within [1, M]).
  bool bound_qualified = false;
  /// refuted: the problem with no replacement.
  std::optional<ReplacementProblem> witness;
  /// Networks from the input to the one whose vertex failed.
  std::vector<Network> chain;
  std::size_t failed_vertex = 0;
  /// Symbolic witness, used by the N = 3 certificate.
  std::optional<AngleExpr> witness_expr;
  std::string detail;
};

std::string to_string(AuditStatus s);

/// Breadth-first search over iterated replacements. Every replacement of
/// every vertex must itself be replaceable; the first vertex without one
/// refutes the network. Networks are memoized by canonical form. Depth is
/// capped at 4 and the bound at 50.
AuditVerdict good_network_audit(const Network& net, int depth, long bound);

/// Twice-iterated replacement at v1 and at v3 of a symbolic triangle: the
/// a12 slots differ by (3/4)π, whose exponential is not a rational point,
/// while both would have to be rational. Refutes every N = 3 network at
/// depth 2.
AuditVerdict certify_no_good_n3();

}  // namespace geonet
