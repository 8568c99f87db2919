#include "chaoslab/threading.hpp"

#include <atomic>
#include <thread>
#include <vector>

#include "chaoslab/summation.hpp"

namespace chaoslab {

namespace {
int g_budget = 0;  // 0 = not set yet, fall back to hardware_concurrency
}

void set_thread_budget(int n) { g_budget = n > 0 ? n : 0; }

int thread_budget() {
  if (g_budget > 0) return g_budget;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void parallel_for_chunks(std::size_t n, std::size_t grain,
                         const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  if (grain == 0) grain = 1;
  const std::size_t chunks = (n + grain - 1) / grain;
  const int workers = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(thread_budget()), chunks));

  if (workers <= 1) {
    for (std::size_t c = 0; c < chunks; ++c)
      fn(c * grain, std::min(n, (c + 1) * grain));
    return;
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      fn(c * grain, std::min(n, (c + 1) * grain));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

double parallel_reduce(std::size_t n, std::size_t grain,
                       const std::function<double(std::size_t)>& term) {
  if (n == 0) return 0.0;
  if (grain == 0) grain = 1;
  const std::size_t chunks = (n + grain - 1) / grain;
  std::vector<double> partial(chunks, 0.0);
  parallel_for_chunks(n, grain, [&](std::size_t b, std::size_t e) {
    CompensatedSum s;
    for (std::size_t i = b; i < e; ++i) s.add(term(i));
    partial[b / grain] = s.value();
  });
  CompensatedSum total;
  for (double p : partial) total.add(p);
  return total.value();
}

}  // namespace chaoslab
