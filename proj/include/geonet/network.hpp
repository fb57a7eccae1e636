#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "geonet/circle_point.hpp"

namespace geonet {

using Multiplicity = std::int64_t;

/// Vertex on the unit circle carrying an exterior radial ray of weight m_v.
struct Vertex {
  CirclePoint position;
  Multiplicity exterior_mult = 1;
};

/// Interior chord between two vertices, endpoints stored with i < j.
struct InteriorEdge {
  std::size_t i = 0;
  std::size_t j = 0;
  Multiplicity mult = 1;

  friend bool operator==(const InteriorEdge&, const InteriorEdge&) = default;
};

using EdgeIndexPair = std::pair<std::size_t, std::size_t>;

/// Weighted straight-chord network with every vertex on the unit circle.
///
/// Vertices are kept sorted by strictly increasing angle, so vertex indices
/// follow the cyclic order; edges are sorted by (i, j). Instances are
/// immutable once built.
class Network {
 public:
  Network() = default;

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<InteriorEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }
  const InteriorEdge& edge(std::size_t e) const { return edges_.at(e); }

  /// True when every position carries exact data.
  bool all_exact() const;
  /// Indices of edges incident to vertex i, ascending.
  std::vector<std::size_t> incident_edges(std::size_t i) const;
  std::size_t degree(std::size_t i) const { return incident_edges(i).size(); }
  std::vector<std::size_t> degrees() const;
  /// Vertex at the other end of edge e from vertex i.
  std::size_t other_end(std::size_t e, std::size_t i) const;

  Multiplicity exterior_mult_sum() const;

  /// Same vertex positions (see CirclePoint::same_point), weights and edges.
  friend bool operator==(const Network& a, const Network& b);

 private:
  friend Network make_network(std::vector<Vertex> vertices,
                              std::vector<InteriorEdge> edges);

  std::vector<Vertex> vertices_;
  std::vector<InteriorEdge> edges_;
};

/// Validates raw input and returns the canonically ordered network.
///
/// Throws DuplicateVertexAngle, ZeroMultiplicity, SelfLoopEdge, DuplicateEdge
/// and IndexOutOfRange. Negative weights are reported as ZeroMultiplicity.
Network make_network(std::vector<Vertex> vertices, std::vector<InteriorEdge> edges);

/// Straight line through the origin: vertices at angles 0 and pi, weight m
/// everywhere.
Network line_network(Multiplicity m = 1);

}  // namespace geonet
