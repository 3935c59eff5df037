#include "engelnq/parallel.hpp"

#include <atomic>
#include <cstdlib>

namespace engelnq {

namespace {
std::atomic<unsigned> g_threads{0};
}

unsigned default_threads() {
  unsigned t = g_threads.load();
  if (t)
    return t;
  if (const char *env = std::getenv("ENGELNQ_THREADS")) {
    unsigned v = static_cast<unsigned>(std::atoi(env));
    if (v >= 1)
      return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

void set_default_threads(unsigned n) { g_threads.store(n); }

} // namespace engelnq
