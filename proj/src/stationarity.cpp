#include "geonet/stationarity.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "geonet/errors.hpp"

namespace geonet {

void RationalMatrix::append_row(const std::vector<Rational>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw ArithmeticError("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<Rational> RationalMatrix::multiply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw ArithmeticError("vector length mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += (*this)(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

namespace {

double tolerance_for(const Network& net, double tol) {
  Multiplicity total = net.exterior_mult_sum();
  for (const auto& e : net.edges()) total += e.mult;
  return tol * std::max<double>(1.0, static_cast<double>(total));
}

std::vector<EdgeIndexPair> edge_pairs(const Network& net) {
  std::vector<EdgeIndexPair> out;
  for (const auto& e : net.edges()) out.emplace_back(e.i, e.j);
  return out;
}

std::vector<CirclePoint> positions_of(const Network& net) {
  std::vector<CirclePoint> out;
  for (const auto& v : net.vertices()) out.push_back(v.position);
  return out;
}

std::vector<Rational> weight_vector(const Network& net) {
  std::vector<Rational> w;
  for (const auto& v : net.vertices()) w.emplace_back(v.exterior_mult);
  for (const auto& e : net.edges()) w.emplace_back(e.mult);
  return w;
}

}  // namespace

Eigen::Vector2d stationarity_residual(const Network& net, std::size_t i) {
  if (i >= net.vertex_count()) throw IndexOutOfRange("vertex index out of range");
  if (auto exact = exact_stationarity_residual(net, i)) {
    return {exact->x.to_double(), exact->y.to_double()};
  }
  const Eigen::Vector2d v = net.vertex(i).position.coords();
  Eigen::Vector2d r = static_cast<double>(net.vertex(i).exterior_mult) * v;
  for (std::size_t e : net.incident_edges(i)) {
    const Eigen::Vector2d w = net.vertex(net.other_end(e, i)).position.coords();
    r += static_cast<double>(net.edge(e).mult) * (w - v).normalized();
  }
  return r;
}

std::optional<SurdVec2> exact_stationarity_residual(const Network& net, std::size_t i) {
  if (i >= net.vertex_count()) throw IndexOutOfRange("vertex index out of range");
  const auto& pv = net.vertex(i).position;
  if (!pv.is_exact()) return std::nullopt;
  const SurdVec2 v = pv.exact().coords();
  SurdVec2 r = Surd(Rational(net.vertex(i).exterior_mult)) * v;
  for (std::size_t e : net.incident_edges(i)) {
    const auto& pw = net.vertex(net.other_end(e, i)).position;
    if (!pw.is_exact()) return std::nullopt;
    const SurdVec2 diff = pw.exact().coords() - v;
    auto len = sqrt_in_closure(diff.norm_squared());
    if (!len) return std::nullopt;
    r = r + (Surd(Rational(net.edge(e).mult)) * len->inverse()) * diff;
  }
  return r;
}

RationalMatrix stationarity_rows(const std::vector<CirclePoint>& positions,
                                 const std::vector<EdgeIndexPair>& edges) {
  const std::size_t n = positions.size();
  const std::size_t cols = n + edges.size();
  std::vector<SurdVec2> pts;
  pts.reserve(n);
  for (const auto& p : positions) {
    if (!p.is_exact()) throw ExactDataMissing("stationarity_rows needs exact positions");
    pts.push_back(p.exact().coords());
  }

  SqrtClassifier classifier;
  struct Term {
    std::size_t group;
    SurdVec2 direction;  // from the lower endpoint, scaled by 1/ratio
  };
  std::vector<Term> terms;
  terms.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n || a == b) throw IndexOutOfRange("bad edge endpoints");
    SurdVec2 diff = pts[b] - pts[a];
    auto placement = classifier.classify(diff.norm_squared());
    terms.push_back({placement.group, placement.ratio.inverse() * diff});
  }

  // (vertex, group, coordinate, radicand) -> column -> coefficient
  using Key = std::tuple<std::size_t, std::size_t, int, Integer>;
  std::map<Key, std::map<std::size_t, Rational>> rows;
  // The rational x and y components of every vertex always get a row, so a
  // system with rational chord lengths has exactly 2N rows.
  for (std::size_t v = 0; v < n; ++v) {
    for (int coord = 0; coord < 2; ++coord) rows[{v, 0, coord, Integer(1)}];
  }
  auto deposit = [&](std::size_t vertex, std::size_t group, const SurdVec2& vec,
                     std::size_t col, int sign) {
    for (int coord = 0; coord < 2; ++coord) {
      const Surd& s = coord == 0 ? vec.x : vec.y;
      for (const auto& [radicand, q] : s.terms()) {
        rows[{vertex, group, coord, radicand}][col] += sign > 0 ? q : Rational(-q);
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) deposit(v, 0, pts[v], v, +1);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    deposit(edges[e].first, terms[e].group, terms[e].direction, n + e, +1);
    deposit(edges[e].second, terms[e].group, terms[e].direction, n + e, -1);
  }

  RationalMatrix out(0, cols);
  for (const auto& [key, coeffs] : rows) {
    std::vector<Rational> row(cols);
    bool nonzero = false;
    for (const auto& [col, q] : coeffs) {
      row[col] = q;
      if (q != 0) nonzero = true;
    }
    const bool base = std::get<1>(key) == 0 && std::get<3>(key) == 1;
    if (nonzero || base) out.append_row(row);
  }
  return out;
}

bool is_stationary(const Network& net, Mode mode, double tol) {
  if (mode == Mode::exact) {
    if (!net.all_exact()) {
      throw ExactDataMissing("exact stationarity check needs exact positions");
    }
    const auto rows = stationarity_rows(positions_of(net), edge_pairs(net));
    const auto values = rows.multiply(weight_vector(net));
    return std::all_of(values.begin(), values.end(),
                       [](const Rational& q) { return q == 0; });
  }
  const double limit = tolerance_for(net, tol);
  for (std::size_t i = 0; i < net.vertex_count(); ++i) {
    if (stationarity_residual(net, i).norm() > limit) return false;
  }
  return true;
}

bool chords_cross(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
  if (a > b) std::swap(a, b);
  if (c > d) std::swap(c, d);
  if (a == c || a == d || b == c || b == d) return false;
  auto inside = [&](std::size_t x) { return a < x && x < b; };
  return inside(c) != inside(d);
}

std::vector<EdgeIndexPair> crossing_pairs(const Network& net) {
  std::vector<EdgeIndexPair> out;
  const auto& edges = net.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (std::size_t f = e + 1; f < edges.size(); ++f) {
      if (chords_cross(edges[e].i, edges[e].j, edges[f].i, edges[f].j)) out.emplace_back(e, f);
    }
  }
  return out;
}

ValidationReport check_admissible(const Network& net, Mode mode, double tol) {
  ValidationReport report;
  for (std::size_t i = 0; i < net.vertex_count(); ++i) {
    report.max_residual = std::max(report.max_residual, stationarity_residual(net, i).norm());
  }
  report.stationary = is_stationary(net, mode, tol);
  if (!report.stationary) {
    const double limit = tolerance_for(net, tol);
    for (std::size_t i = 0; i < net.vertex_count(); ++i) {
      const double r = stationarity_residual(net, i).norm();
      if (mode == Mode::floating && r <= limit) continue;
      if (mode == Mode::exact) {
        auto exact = exact_stationarity_residual(net, i);
        if (exact && exact->is_zero()) continue;
        if (!exact && r <= limit) continue;
      }
      std::ostringstream os;
      os << "vertex " << i << " residual " << r;
      report.violations.push_back({"nonstationary", os.str()});
    }
    if (report.violations.empty()) {
      report.violations.push_back({"nonstationary", "stationarity system not satisfied"});
    }
  }
  report.crossings = crossing_pairs(net);
  for (const auto& [e, f] : report.crossings) {
    std::ostringstream os;
    os << "edges " << e << " and " << f << " cross";
    report.violations.push_back({"crossing", os.str()});
  }
  return report;
}

InvariantReport invariant_report(const Network& net) {
  InvariantReport report;
  for (const auto& v : net.vertices()) {
    report.exterior_balance += static_cast<double>(v.exterior_mult) * v.position.coords();
    report.mass_gap += static_cast<double>(v.exterior_mult);
  }
  for (const auto& e : net.edges()) {
    report.mass_gap -= static_cast<double>(e.mult) *
                       (net.vertex(e.i).position.coords() - net.vertex(e.j).position.coords()).norm();
  }
  report.exterior_parity = net.exterior_mult_sum() % 2 == 0 ? Parity::even : Parity::odd;

  if (net.all_exact()) {
    SurdVec2 balance{Surd(0), Surd(0)};
    for (const auto& v : net.vertices()) {
      balance = balance + Surd(Rational(v.exterior_mult)) * v.position.exact().coords();
    }
    report.balance_vanishes = balance.is_zero();

    // Chord lengths may leave the closure; the gap vanishes iff its
    // component along every length class vanishes.
    SqrtClassifier classifier;
    std::vector<Surd> per_group{Surd(Rational(net.exterior_mult_sum()))};
    for (const auto& e : net.edges()) {
      SurdVec2 diff = net.vertex(e.j).position.exact().coords() -
                      net.vertex(e.i).position.exact().coords();
      auto placement = classifier.classify(diff.norm_squared());
      if (per_group.size() <= placement.group) per_group.resize(placement.group + 1);
      per_group[placement.group] -= Surd(Rational(e.mult)) * placement.ratio;
    }
    report.mass_gap_vanishes = std::all_of(per_group.begin(), per_group.end(),
                                           [](const Surd& s) { return s.is_zero(); });
  }
  return report;
}

}  // namespace geonet
