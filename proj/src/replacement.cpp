#include "geonet/replacement.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "geonet/canonical.hpp"
#include "geonet/combinatorics.hpp"
#include "geonet/errors.hpp"
#include "geonet/solver.hpp"

namespace geonet {

bool ReplacementProblem::exact() const {
  return std::all_of(positions.begin(), positions.end(),
                     [](const CirclePoint& p) { return p.is_exact(); });
}

ReplacementProblem replacement_problem(const Network& net, std::size_t i) {
  if (i >= net.vertex_count()) throw IndexOutOfRange("vertex index out of range");
  const auto incident = net.incident_edges(i);
  if (incident.empty()) throw IsolatedVertex("vertex " + std::to_string(i) + " has no interior edge");
  const CirclePoint& v = net.vertex(i).position;

  std::vector<CirclePoint> dirs{
      v.is_exact() ? CirclePoint::from_tan_half(Surd(0)) : CirclePoint::from_angle(0.0)};
  std::vector<Multiplicity> mults{net.vertex(i).exterior_mult};
  for (std::size_t e : incident) {
    const CirclePoint& w = net.vertex(net.other_end(e, i)).position;
    std::optional<CirclePoint> tangent;
    if (v.is_exact() && w.is_exact()) {
      const SurdVec2 diff = w.exact().coords() - v.exact().coords();
      if (auto len = sqrt_in_closure(diff.norm_squared())) {
        const Surd inv = len->inverse();
        tangent = CirclePoint::from_exact_coords(inv * diff.x, inv * diff.y).rotated_back(v);
      }
    }
    if (!tangent) {
      const Eigen::Vector2d d = w.coords() - v.coords();
      tangent = CirclePoint::from_angle(std::atan2(d.y(), d.x()) - v.angle());
    }
    dirs.push_back(*tangent);
    mults.push_back(net.edge(e).mult);
  }

  std::vector<std::size_t> order(dirs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return dirs[a].angle() < dirs[b].angle();
  });
  ReplacementProblem problem;
  for (std::size_t k : order) {
    problem.positions.push_back(dirs[k]);
    problem.exterior_mults.push_back(mults[k]);
  }
  return problem;
}

namespace {

bool antipodal(const CirclePoint& a, const CirclePoint& b) {
  const SurdVec2 sum = a.exact().coords() + b.exact().coords();
  return sum.is_zero();
}

}  // namespace

ReplacementSearch search_replacements(const ReplacementProblem& problem, long bound,
                                      std::size_t limit) {
  if (bound < 1) throw DomainError("bound must be at least 1");
  ReplacementSearch search;
  if (!problem.exact()) return search;

  const std::size_t n = problem.positions.size();
  std::vector<Rational> fixed;
  for (Multiplicity m : problem.exterior_mults) fixed.emplace_back(m);
  bool bound_mattered = false;

  for_each_chord_set(n, true, [&](const ChordSet& s) {
    ++search.structures_tried;
    const auto deg = s.degrees();
    if (std::find(deg.begin(), deg.end(), 0) != deg.end()) return true;
    // A degree-1 vertex balances its exterior ray only along a diameter.
    for (const auto& [a, b] : s.chords()) {
      if ((deg[a] == 1 || deg[b] == 1) &&
          !antipodal(problem.positions[a], problem.positions[b])) {
        return true;
      }
    }
    const auto system = build_system(problem.positions, s, fixed);
    const auto result = solve(system);
    if (!result.particular) return true;
    auto solutions = positive_integer_solutions(result, bound);
    if (solutions.empty()) {
      if (!result.free_columns.empty()) {
        bound_mattered = true;
      } else {
        // Unique solution: only its size can depend on the bound.
        const auto& x = *result.particular;
        const bool positive_integral = std::all_of(x.begin(), x.end(), [](const Rational& q) {
          return q.get_den() == 1 && q > 0;
        });
        if (positive_integral) bound_mattered = true;
      }
      return true;
    }
    for (const auto& sol : solutions) {
      if (search.replacements.size() == limit) {
        search.truncated = true;
        return false;
      }
      search.replacements.push_back(network_from_solution(system, sol));
    }
    return true;
  });

  if (!search.replacements.empty()) {
    search.outcome = SearchOutcome::found;
  } else {
    search.outcome = bound_mattered ? SearchOutcome::none_within_bound : SearchOutcome::none_any_bound;
  }
  return search;
}

std::optional<Network> replacement_feasible(const ReplacementProblem& problem, long bound) {
  auto search = search_replacements(problem, bound, 1);
  if (search.replacements.empty()) return std::nullopt;
  return search.replacements.front();
}

std::string to_string(AuditStatus s) {
  switch (s) {
    case AuditStatus::good:
      return "good";
    case AuditStatus::refuted:
      return "refuted";
    case AuditStatus::inconclusive:
      return "inconclusive";
  }
  return "";
}

AuditVerdict good_network_audit(const Network& net, int depth, long bound) {
  if (depth < 0 || depth > 4) throw DomainError("audit depth must lie in [0, 4]");
  if (bound < 1 || bound > 50) throw DomainError("audit bound must lie in [1, 50]");

  struct Node {
    Network net;
    int level;
    long parent;
  };
  std::vector<Node> nodes{{net, 0, -1}};
  std::map<std::string, int> expanded;  // canonical key -> shallowest level
  std::deque<std::size_t> queue{0};
  AuditVerdict verdict;
  verdict.bound = bound;
  std::string inconclusive_reason;

  auto chain_of = [&](std::size_t idx) {
    std::vector<Network> chain;
    for (long k = static_cast<long>(idx); k >= 0; k = nodes[k].parent) chain.push_back(nodes[k].net);
    std::reverse(chain.begin(), chain.end());
    return chain;
  };

  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    const int level = nodes[idx].level;
    if (level >= depth) continue;
    const Network current = nodes[idx].net;
    const std::string key = network_key(canonical_form(current));
    auto seen = expanded.find(key);
    if (seen != expanded.end() && seen->second <= level) continue;
    expanded[key] = level;

    for (std::size_t v = 0; v < current.vertex_count(); ++v) {
      if (current.degree(v) == 0) {
        verdict.status = AuditStatus::refuted;
        verdict.depth = level;
        verdict.chain = chain_of(idx);
        verdict.failed_vertex = v;
        verdict.detail = "vertex " + std::to_string(v) + " is isolated";
        return verdict;
      }
      ReplacementProblem problem = replacement_problem(current, v);
      const auto search = search_replacements(problem, bound);
      if (search.outcome == SearchOutcome::undecidable) {
        if (inconclusive_reason.empty()) {
          inconclusive_reason = "vertex " + std::to_string(v) + " at level " +
                                std::to_string(level) + " has a tangent without exact form";
        }
        continue;
      }
      if (search.replacements.empty()) {
        verdict.status = AuditStatus::refuted;
        verdict.depth = level + 1;
        verdict.bound_qualified = search.outcome == SearchOutcome::none_within_bound;
        verdict.witness = std::move(problem);
        verdict.chain = chain_of(idx);
        verdict.failed_vertex = v;
        std::ostringstream os;
        os << "vertex " << v << " at level " << level << " has no replacement"
           << (verdict.bound_qualified ? " with weights in [1, " + std::to_string(bound) + "]"
                                       : " for any weights");
        verdict.detail = os.str();
        return verdict;
      }
      for (const auto& r : search.replacements) {
        nodes.push_back({r, level + 1, static_cast<long>(idx)});
        queue.push_back(nodes.size() - 1);
      }
    }
  }
  if (!inconclusive_reason.empty()) {
    verdict.status = AuditStatus::inconclusive;
    verdict.detail = inconclusive_reason;
    return verdict;
  }
  verdict.status = AuditStatus::good;
  verdict.depth = depth;
  verdict.detail = "every replacement chain survives " + std::to_string(depth) + " levels";
  return verdict;
}

AuditVerdict certify_no_good_n3() {
  const AngleTriple start = n3_angle_variables();
  const AngleTriple twice_at_1 = n3_angle_map(n3_angle_map(start, 1), 1);
  const AngleTriple twice_at_3 = n3_angle_map(n3_angle_map(start, 3), 3);
  const AngleExpr diff = twice_at_1[0] - twice_at_3[0];

  AuditVerdict verdict;
  verdict.depth = 2;
  verdict.witness_expr = diff;
  if (rational_point_of_expr(diff) == RationalPointClass::forced_irrational) {
    verdict.status = AuditStatus::refuted;
    verdict.detail = diff.str() + " is not a rational point";
  } else {
    verdict.status = AuditStatus::inconclusive;
    verdict.detail = diff.str() + " does not force a contradiction";
  }
  return verdict;
}

}  // namespace geonet
