#include "leonard_lab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace leonard_lab {

std::size_t worker_count() {
  if (const char* env = std::getenv("LEONARD_LAB_THREADS"); env != nullptr) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<std::size_t>(value);
    } catch (const std::exception&) {
      // Fall through to the hardware default on garbage.
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace leonard_lab
