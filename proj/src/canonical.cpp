#include "geonet/canonical.hpp"

#include <cmath>
#include <compare>
#include <optional>
#include <sstream>
#include <tuple>
#include <vector>

#include "geonet/errors.hpp"

namespace geonet {

namespace {

struct SortKey {
  std::vector<std::tuple<long long, Multiplicity>> vertices;
  std::vector<std::tuple<std::size_t, std::size_t, Multiplicity>> edges;

  auto operator<=>(const SortKey&) const = default;
};

long long quantize(double angle) {
  long long q = std::llround(angle * 1e9);
  // 2 pi - epsilon and 0 are the same place.
  const long long full = std::llround(kTwoPi * 1e9);
  return q >= full ? 0 : q;
}

SortKey sort_key(const Network& net) {
  SortKey key;
  for (const auto& v : net.vertices()) {
    key.vertices.emplace_back(quantize(v.position.angle()), v.exterior_mult);
  }
  for (const auto& e : net.edges()) key.edges.emplace_back(e.i, e.j, e.mult);
  return key;
}

}  // namespace

Network rotate_to_vertex(const Network& net, std::size_t k, bool reflect) {
  if (k >= net.vertex_count()) throw IndexOutOfRange("vertex index out of range");
  const CirclePoint ref =
      reflect ? net.vertex(k).position.reflected() : net.vertex(k).position;
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < net.vertex_count(); ++i) {
    CirclePoint p = reflect ? net.vertex(i).position.reflected() : net.vertex(i).position;
    if (i == k) {
      p = p.is_exact() ? CirclePoint::from_tan_half(Surd(0)) : CirclePoint::from_angle(0.0);
    } else {
      p = p.rotated_back(ref);
    }
    vertices.push_back({p, net.vertex(i).exterior_mult});
  }
  return make_network(std::move(vertices), net.edges());
}

Network canonical_form(const Network& net) {
  if (net.vertex_count() == 0) return net;
  std::optional<Network> best;
  std::optional<SortKey> best_key;
  for (bool reflect : {false, true}) {
    for (std::size_t k = 0; k < net.vertex_count(); ++k) {
      Network candidate = rotate_to_vertex(net, k, reflect);
      SortKey key = sort_key(candidate);
      if (!best_key || key < *best_key) {
        best_key = std::move(key);
        best = std::move(candidate);
      }
    }
  }
  return *best;
}

std::string network_key(const Network& net) {
  std::ostringstream os;
  os << "V";
  for (const auto& v : net.vertices()) {
    os << ' ' << quantize(v.position.angle()) << ':' << v.exterior_mult;
  }
  os << " E";
  for (const auto& e : net.edges()) os << ' ' << e.i << '-' << e.j << ':' << e.mult;
  return os.str();
}

}  // namespace geonet
