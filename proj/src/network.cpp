#include "geonet/network.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>
#include <string>

#include "geonet/errors.hpp"

namespace geonet {

bool Network::all_exact() const {
  return std::all_of(vertices_.begin(), vertices_.end(),
                     [](const Vertex& v) { return v.position.is_exact(); });
}

std::vector<std::size_t> Network::incident_edges(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    if (edges_[e].i == i || edges_[e].j == i) out.push_back(e);
  }
  return out;
}

std::vector<std::size_t> Network::degrees() const {
  std::vector<std::size_t> deg(vertices_.size(), 0);
  for (const auto& e : edges_) {
    ++deg[e.i];
    ++deg[e.j];
  }
  return deg;
}

std::size_t Network::other_end(std::size_t e, std::size_t i) const {
  const auto& edge = edges_.at(e);
  return edge.i == i ? edge.j : edge.i;
}

Multiplicity Network::exterior_mult_sum() const {
  return std::accumulate(vertices_.begin(), vertices_.end(), Multiplicity{0},
                         [](Multiplicity acc, const Vertex& v) {
                           return acc + v.exterior_mult;
                         });
}

bool operator==(const Network& a, const Network& b) {
  if (a.vertices_.size() != b.vertices_.size() || a.edges_ != b.edges_) return false;
  for (std::size_t i = 0; i < a.vertices_.size(); ++i) {
    const auto& va = a.vertices_[i];
    const auto& vb = b.vertices_[i];
    if (va.exterior_mult != vb.exterior_mult) return false;
    if (va.position.is_exact() != vb.position.is_exact()) return false;
    if (!va.position.same_point(vb.position)) return false;
  }
  return true;
}

Network make_network(std::vector<Vertex> vertices, std::vector<InteriorEdge> edges) {
  const std::size_t n = vertices.size();
  for (const auto& v : vertices) {
    if (v.exterior_mult <= 0) {
      throw ZeroMultiplicity("exterior multiplicity must be a positive integer");
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return vertices[a].position.angle() < vertices[b].position.angle();
  });
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      if (vertices[order[k]].position.same_point(vertices[order[l]].position)) {
        throw DuplicateVertexAngle("two vertices at angle " +
                                   std::to_string(vertices[order[k]].position.angle()));
      }
    }
  }
  std::vector<std::size_t> new_index(n);
  for (std::size_t k = 0; k < n; ++k) new_index[order[k]] = k;

  Network net;
  net.vertices_.reserve(n);
  for (std::size_t k = 0; k < n; ++k) net.vertices_.push_back(vertices[order[k]]);

  std::set<EdgeIndexPair> seen;
  for (auto e : edges) {
    if (e.i >= n || e.j >= n) throw IndexOutOfRange("edge endpoint out of range");
    if (e.i == e.j) throw SelfLoopEdge("edge joins vertex " + std::to_string(e.i) + " to itself");
    if (e.mult <= 0) throw ZeroMultiplicity("edge multiplicity must be a positive integer");
    std::size_t a = new_index[e.i], b = new_index[e.j];
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) {
      throw DuplicateEdge("duplicate edge (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    }
    net.edges_.push_back({a, b, e.mult});
  }
  std::sort(net.edges_.begin(), net.edges_.end(),
            [](const InteriorEdge& x, const InteriorEdge& y) {
              return std::tie(x.i, x.j) < std::tie(y.i, y.j);
            });
  return net;
}

Network line_network(Multiplicity m) {
  return make_network({{CirclePoint::from_tan_half(Surd(0)), m}, {CirclePoint::at_pi(), m}},
                      {{0, 1, m}});
}

}  // namespace geonet
