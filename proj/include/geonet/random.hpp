#pragma once

#include <cstdint>
#include <random>

namespace geonet {

/// Seed taken from the GEONET_SEED environment variable, or a fixed default.
std::uint64_t default_seed();

/// The single generator behind every randomized choice in the library and
/// its tests. Seeded once from default_seed().
std::mt19937_64& random_engine();

/// Restarts the shared generator from `seed`.
void reseed(std::uint64_t seed);

}  // namespace geonet
