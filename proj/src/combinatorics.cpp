#include "geonet/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "geonet/errors.hpp"
#include "geonet/stationarity.hpp"

namespace geonet {

namespace {

bool adjacent(std::size_t n, std::size_t i, std::size_t j) {
  return j == i + 1 || (i == 0 && j + 1 == n);
}

std::vector<EdgeIndexPair> candidate_chords(std::size_t n, bool allow_adjacent) {
  std::vector<EdgeIndexPair> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (allow_adjacent || !adjacent(n, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool crosses_any(const std::vector<EdgeIndexPair>& current, const EdgeIndexPair& c) {
  return std::any_of(current.begin(), current.end(), [&](const EdgeIndexPair& d) {
    return chords_cross(d.first, d.second, c.first, c.second);
  });
}

}  // namespace

ChordSet::ChordSet(std::size_t n, std::vector<EdgeIndexPair> chords) : n_(n) {
  for (auto& [i, j] : chords) {
    if (i >= n || j >= n) throw IndexOutOfRange("chord endpoint out of range");
    if (i == j) throw SelfLoopEdge("chord joins a point to itself");
    if (i > j) std::swap(i, j);
  }
  std::sort(chords.begin(), chords.end());
  if (std::adjacent_find(chords.begin(), chords.end()) != chords.end()) {
    throw DuplicateEdge("duplicate chord");
  }
  for (std::size_t a = 0; a < chords.size(); ++a) {
    for (std::size_t b = a + 1; b < chords.size(); ++b) {
      if (chords_cross(chords[a].first, chords[a].second, chords[b].first, chords[b].second)) {
        throw CrossingEdges("chords cross");
      }
    }
  }
  chords_ = std::move(chords);
}

std::vector<std::size_t> ChordSet::degrees() const {
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& [i, j] : chords_) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

BoundsTriple closed_form_bounds(std::size_t n) {
  if (n == 0) throw DomainError("closed_form_bounds needs N >= 1");
  const long N = static_cast<long>(n);
  BoundsTriple b;
  b.f = std::max(N - 3, 0L);
  b.F = N >= 3 ? 2 * N - 3 : std::max(N - 1, 0L);
  b.F1 = N >= 4 ? 2 * N - 5 : 1;
  return b;
}

long recursive_max_chords(std::size_t n) {
  std::vector<long> f(std::max<std::size_t>(n + 1, 4), 0);
  for (std::size_t m = 4; m <= n; ++m) {
    long best = 0;
    for (std::size_t k = 1; k + 1 <= m - 2; ++k) {
      const std::size_t l = m - 2 - k;
      best = std::max(best, 1 + f[k + 2] + f[l + 2]);
    }
    f[m] = best;
  }
  return f[n];
}

void for_each_chord_set(std::size_t n, bool allow_adjacent,
                        const std::function<bool(const ChordSet&)>& visit) {
  if (n == 0) throw DomainError("enumeration needs N >= 1");
  if (n > kMaxEnumerationPoints) {
    throw DomainError("enumeration capped at N = " + std::to_string(kMaxEnumerationPoints));
  }
  const auto chords = candidate_chords(n, allow_adjacent);
  std::vector<EdgeIndexPair> current;
  bool stop = false;
  std::function<void(std::size_t)> dfs = [&](std::size_t next) {
    if (!visit(ChordSet(n, current, ChordSet::Trusted{}))) {
      stop = true;
      return;
    }
    for (std::size_t c = next; c < chords.size() && !stop; ++c) {
      if (crosses_any(current, chords[c])) continue;
      current.push_back(chords[c]);
      dfs(c + 1);
      current.pop_back();
    }
  };
  dfs(0);
}

std::vector<ChordSet> enumerate_chord_sets(std::size_t n, bool allow_adjacent) {
  std::vector<ChordSet> out;
  for_each_chord_set(n, allow_adjacent, [&](const ChordSet& s) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::vector<ChordSet> maximal_chord_sets(std::size_t n, bool allow_adjacent) {
  const auto chords = candidate_chords(n, allow_adjacent);
  std::vector<ChordSet> out;
  for_each_chord_set(n, allow_adjacent, [&](const ChordSet& s) {
    const auto& cur = s.chords();
    for (const auto& c : chords) {
      if (std::binary_search(cur.begin(), cur.end(), c)) continue;
      if (!crosses_any(cur, c)) return true;
    }
    out.push_back(s);
    return true;
  });
  return out;
}

long max_nonadjacent_chords(std::size_t n) {
  long best = 0;
  for_each_chord_set(n, false, [&](const ChordSet& s) {
    best = std::max(best, static_cast<long>(s.size()));
    return true;
  });
  return best;
}

unsigned long long triangulation_count(std::size_t n) {
  if (n < 3) return 1;
  // C_0 .. C_{n-2} via C_{k+1} = sum C_i C_{k-i}.
  std::vector<unsigned long long> c(n - 1, 0);
  c[0] = 1;
  for (std::size_t k = 1; k <= n - 2; ++k) {
    for (std::size_t i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  }
  return c[n - 2];
}

namespace {

// Degree-1 vertices must sit on a diameter whose far end is a vertex: at most
// two of them, joined to each other if there are two, and a far end of higher
// degree needs chords on both sides of the diameter to balance.
bool degree_one_shape_ok(const ChordSet& s, const std::vector<std::size_t>& deg) {
  std::vector<std::size_t> ones;
  for (std::size_t v = 0; v < deg.size(); ++v) {
    if (deg[v] == 1) ones.push_back(v);
  }
  if (ones.size() > 2) return false;
  for (std::size_t v : ones) {
    std::size_t w = 0;
    for (const auto& [a, b] : s.chords()) {
      if (a == v) w = b;
      if (b == v) w = a;
    }
    if (ones.size() == 2 && std::find(ones.begin(), ones.end(), w) == ones.end()) return false;
    if (deg[w] >= 2) {
      const std::size_t lo = std::min(v, w), hi = std::max(v, w);
      bool inside = false, outside = false;
      for (const auto& [a, b] : s.chords()) {
        if (a != w && b != w) continue;
        const std::size_t u = a == w ? b : a;
        if (u == v) continue;
        (lo < u && u < hi ? inside : outside) = true;
      }
      if (!inside || !outside) return false;
    }
  }
  return true;
}

void format_witnesses_n(std::size_t n, std::vector<std::string>& out) {
  const long N = static_cast<long>(n);
  const auto b = closed_form_bounds(n);
  std::ostringstream a, c;
  if (n == 3) {
    a << "all degrees 2: 2E = sum deg = 6, only the triangle; one degree-1 vertex would give 2E = 5";
    out.push_back(a.str());
  } else if (n == 4) {
    a << "sum deg >= 3N = " << 3 * N << " > 2F(4) = " << 2 * b.F;
    c << "E >= (3(N-2)+2)/2 = " << (3 * (N - 2) + 2) / 2 << " > F1(4) = " << b.F1;
    out.push_back(a.str());
    out.push_back(c.str());
  } else {
    a << "sum deg >= 4N = " << 4 * N << " > 2F(" << N << ") = " << 2 * b.F;
    c << "E >= (4(N-2)+2)/2 = " << (4 * (N - 2) + 2) / 2 << " > F1(" << N << ") = " << b.F1;
    out.push_back(a.str());
    out.push_back(c.str());
  }
}

}  // namespace

CountingAudit audit_counting_argument(std::size_t n, bool keep_records) {
  if (n < 3) throw DomainError("counting audit needs N >= 3");
  CountingAudit audit;
  audit.n = n;
  audit.bounds = closed_form_bounds(n);
  format_witnesses_n(n, audit.witnesses);

  std::set<std::size_t> forbidden;
  if (n == 3) forbidden = {1};
  if (n == 4) forbidden = {2};
  if (n >= 5) forbidden = {2, 3};

  for_each_chord_set(n, true, [&](const ChordSet& s) {
    ++audit.structures;
    StructureRecord rec{s, s.degrees(), static_cast<long>(s.size()), true, false, true, true, false, {}};
    rec.within_F = rec.edges <= audit.bounds.F;
    rec.has_degree_one =
        std::find(rec.degrees.begin(), rec.degrees.end(), 1) != rec.degrees.end();
    rec.degree_one_structure_ok = !rec.has_degree_one || degree_one_shape_ok(s, rec.degrees);
    rec.within_F1 = rec.edges <= audit.bounds.F1;
    audit.all_within_F = audit.all_within_F && rec.within_F;
    if (rec.has_degree_one && rec.degree_one_structure_ok && n >= 4) {
      audit.all_degree_one_within_F1 = audit.all_degree_one_within_F1 && rec.within_F1;
    }

    if (std::find(rec.degrees.begin(), rec.degrees.end(), 0) != rec.degrees.end()) {
      rec.reason = "isolated vertex";
      ++audit.rejected_isolated;
    } else if (!rec.degree_one_structure_ok) {
      rec.reason = "degree-1 vertex off a diameter";
      ++audit.rejected_degree_one;
    } else if (std::any_of(rec.degrees.begin(), rec.degrees.end(),
                           [&](std::size_t d) { return forbidden.count(d) > 0; })) {
      rec.reason = "degree excluded by a smaller case";
      ++audit.rejected_forbidden_degree;
    } else {
      rec.survives = true;
      if (n == 3) {
        audit.deferred.push_back(s);
      } else {
        audit.survivors.push_back(s);
      }
    }
    if (keep_records) audit.records.push_back(std::move(rec));
    return true;
  });
  return audit;
}

}  // namespace geonet
