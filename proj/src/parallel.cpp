#include "hetcache/parallel.hpp"

#include <cstdlib>
#include <string>

namespace hetcache {

namespace {
std::atomic<int> g_override{0};

int env_workers() {
  if (const char* env = std::getenv("HETCACHE_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (...) {
      // Malformed value falls through to auto-detection.
    }
  }
  return 0;
}
}  // namespace

int worker_count() {
  const int forced = g_override.load(std::memory_order_relaxed);
  if (forced >= 1) return forced;
  static const int from_env = env_workers();
  if (from_env >= 1) return from_env;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_worker_count(int n) {
  g_override.store(n >= 1 ? n : 0, std::memory_order_relaxed);
}

}  // namespace hetcache
