#include "tq/parallel.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>
#include <vector>

namespace tq {

int thread_budget() {
  int budget = 0;
  if (const char* env = std::getenv("TQ_THREADS")) {
    const char* end = env + std::strlen(env);
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(env, end, parsed);
    if (ec == std::errc{} && ptr == end && parsed > 0) budget = parsed;
  }
  if (budget == 0) {
    unsigned hw = std::thread::hardware_concurrency();
    budget = hw == 0 ? 1 : static_cast<int>(hw);
  }
  return std::min(budget, 64);
}

void parallel_for(int count, const std::function<void(int)>& fn) {
  if (count <= 0) return;
  const int workers = std::min(thread_budget(), count);
  if (workers <= 1 || count == 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        int i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        fn(i);
      }
    });
}

}  // namespace tq
