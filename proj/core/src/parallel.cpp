#include "ircl/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ircl {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("IRCL_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < hw) hw = cap;
  }
  return hw;
}

int parallel_first_hit(int count, const std::function<bool(int)>& fn) {
  if (count <= 0) return -1;
  int workers = worker_count();
  if (workers == 1 || count < 4) {
    for (int i = 0; i < count; ++i)
      if (fn(i)) return i;
    return -1;
  }
  std::atomic<int> next{0};
  std::atomic<int> best{count};
  auto run = [&] {
    for (;;) {
      int i = next.fetch_add(1);
      if (i >= count) return;
      // indices above an already-found hit cannot improve the minimum
      if (i > best.load()) continue;
      if (fn(i)) {
        int cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(run);
  for (auto& t : pool) t.join();
  int hit = best.load();
  return hit == count ? -1 : hit;
}

}  // namespace ircl
