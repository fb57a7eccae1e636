#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "geonet/network.hpp"

namespace geonet {

/// Hard cap on exhaustive enumeration (the counts grow like Catalan numbers).
inline constexpr std::size_t kMaxEnumerationPoints = 12;

/// Pairwise non-crossing chords on n cyclically ordered points, each stored
/// as (i, j) with i < j and kept sorted.
class ChordSet {
 public:
  /// Throws CrossingEdges, DuplicateEdge, SelfLoopEdge or IndexOutOfRange.
  ChordSet(std::size_t n, std::vector<EdgeIndexPair> chords);

  std::size_t n() const { return n_; }
  const std::vector<EdgeIndexPair>& chords() const { return chords_; }
  std::size_t size() const { return chords_.size(); }
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const ChordSet&, const ChordSet&) = default;

 private:
  struct Trusted {};
  ChordSet(std::size_t n, std::vector<EdgeIndexPair> chords, Trusted)
      : n_(n), chords_(std::move(chords)) {}
  friend void for_each_chord_set(std::size_t, bool,
                                 const std::function<bool(const ChordSet&)>&);

  std::size_t n_ = 0;
  std::vector<EdgeIndexPair> chords_;
};

struct BoundsTriple {
  long f = 0;   // max non-crossing chords avoiding adjacent pairs
  long F = 0;   // max interior edges of an admissible network
  long F1 = 0;  // same, when some vertex has interior degree 1
};

BoundsTriple closed_form_bounds(std::size_t n);

/// The recursion f(N) = max{1 + f(k+2) + f(l+2) : k + l = N - 2, k, l >= 1},
/// with f = 0 when no split exists; memoized, independent of the closed form.
long recursive_max_chords(std::size_t n);

/// Visits every non-crossing chord set on n points (the empty set included)
/// in lexicographic order of the sorted chord lists. With allow_adjacent
/// false, chords between cyclic neighbours are skipped. The visitor returns
/// false to stop early. Throws DomainError for n > kMaxEnumerationPoints.
void for_each_chord_set(std::size_t n, bool allow_adjacent,
                        const std::function<bool(const ChordSet&)>& visit);

std::vector<ChordSet> enumerate_chord_sets(std::size_t n, bool allow_adjacent);

/// Chord sets that admit no further chord.
std::vector<ChordSet> maximal_chord_sets(std::size_t n, bool allow_adjacent);

/// Exhaustive maximum size over enumerate_chord_sets(n, false).
long max_nonadjacent_chords(std::size_t n);

/// Number of triangulations of a convex (n)-gon, C_{n-2}, from the Catalan
/// recurrence.
unsigned long long triangulation_count(std::size_t n);

struct StructureRecord {
  ChordSet chords;
  std::vector<std::size_t> degrees;
  long edges = 0;
  bool within_F = true;
  bool has_degree_one = false;
  bool degree_one_structure_ok = true;  // diameter/antipode shape holds
  bool within_F1 = true;                // only meaningful with a degree-1 vertex
  bool survives = false;
  std::string reason;  // first filter that rejected it
};

/// Outcome of the degree-counting argument on n points.
struct CountingAudit {
  std::size_t n = 0;
  BoundsTriple bounds;
  unsigned long long structures = 0;
  unsigned long long rejected_isolated = 0;
  unsigned long long rejected_degree_one = 0;
  unsigned long long rejected_forbidden_degree = 0;
  std::vector<ChordSet> survivors;
  /// n = 3 only: the triangle, whose fate is decided by the N = 3 analysis.
  std::vector<ChordSet> deferred;
  bool all_within_F = true;
  bool all_degree_one_within_F1 = true;
  /// Instantiated contradictions, e.g. "sum deg >= 3N = 12 > 2F(4) = 10".
  std::vector<std::string> witnesses;
  std::vector<StructureRecord> records;  // filled when requested
};

/// Runs the counting argument over every non-crossing chord structure on n
/// points (n >= 3, sides allowed). A structure survives when it has no
/// isolated vertex, its degree-1 vertices fit the diameter shape, and no
/// vertex has a degree already excluded by the smaller cases (2 for n = 4;
/// 2 and 3 for n >= 5; 1 for n = 3).
CountingAudit audit_counting_argument(std::size_t n, bool keep_records = false);

}  // namespace geonet
