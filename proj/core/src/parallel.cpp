#include "k3corr/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace k3corr {

unsigned worker_count() {
  if (const char* env = std::getenv("K3CORR_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (...) {
      // fall through to the hardware default
    }
    return 1;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

void parallel_chunks(long lo, long hi, long min_chunk,
                     const std::function<void(long, long)>& fn) {
  if (lo >= hi) return;
  const long span = hi - lo;
  const unsigned workers = worker_count();
  if (workers <= 1 || span < min_chunk) {
    fn(lo, hi);
    return;
  }
  long chunks = static_cast<long>(workers);
  if (chunks > span) chunks = span;
  const long step = (span + chunks - 1) / chunks;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(chunks));
  for (long b = lo; b < hi; b += step) {
    const long e = std::min(b + step, hi);
    pool.emplace_back([&fn, b, e] { fn(b, e); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace k3corr
