#include "blockscope/parallel.hpp"

#include <cstdlib>
#include <string>

namespace blockscope {

int thread_count() {
  if (const char* env = std::getenv("BLOCKSCOPE_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace blockscope
