#include "tnp/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tnp {

std::size_t worker_count() {
  if (const char* env = std::getenv("TNP_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace tnp
