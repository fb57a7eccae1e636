#pragma once

#include <string>

#include "geonet/network.hpp"

namespace geonet {

/// Rotates the network so that vertex k lands at angle 0, optionally after
/// mirroring in the x axis. Exact data is carried along exactly.
Network rotate_to_vertex(const Network& net, std::size_t k, bool reflect);

/// Lexicographically least representative over rotations that put some
/// vertex at angle 0, with and without reflection. Idempotent, and equal for
/// networks that differ by a rotation or reflection.
Network canonical_form(const Network& net);

/// Text key of a network (angles quantized to 1e-9 rad), stable under
/// float noise; canonical_key(canonical_form(x)) identifies congruence classes.
std::string network_key(const Network& net);

}  // namespace geonet
