#include "glnconverse/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace glnc {

int configured_threads() {
  const char* env = std::getenv("CONVERSE_THREADS");
  if (!env || !*env) return 1;
  int v = 1;
  try {
    v = std::stoi(env);
  } catch (...) {
    return 1;
  }
  return std::clamp(v, 1, 64);
}

void parallel_chunks(long total, const std::function<void(int, long, long)>& fn) {
  int workers = configured_threads();
  if (total <= 0) return;
  if (workers <= 1 || total < 2 * workers) {
    fn(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  long chunk = (total + workers - 1) / workers;
  for (int t = 0; t < workers; ++t) {
    long b = t * chunk;
    long e = std::min(total, b + chunk);
    if (b >= e) break;
    pool.emplace_back(fn, t, b, e);
  }
  for (auto& th : pool) th.join();
}

}  // namespace glnc
