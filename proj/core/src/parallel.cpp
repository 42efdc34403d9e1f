#include "moment_forge/parallel.hpp"

#include <cstdlib>
#include <string>

namespace moment_forge {

std::size_t worker_count() {
  if (const char* env = std::getenv("MOMENT_FORGE_THREADS")) {
    try {
      std::size_t used = 0;
      const long value = std::stol(env, &used);
      if (used == std::string(env).size() && value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace moment_forge
