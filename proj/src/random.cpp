#include "geonet/random.hpp"

#include <cstdlib>
#include <string>

namespace geonet {

std::uint64_t default_seed() {
  if (const char* env = std::getenv("GEONET_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      // Fall through to the default on unparsable input.
    }
  }
  return 20180711;
}

std::mt19937_64& random_engine() {
  static std::mt19937_64 engine(default_seed());
  return engine;
}

void reseed(std::uint64_t seed) { random_engine().seed(seed); }

}  // namespace geonet
