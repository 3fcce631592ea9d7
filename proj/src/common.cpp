#include "lakm/common.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace lakm {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = hardware concurrency
}

int max_threads() {
  int n = g_max_threads.load(std::memory_order_relaxed);
  if (n > 0) return n;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void set_max_threads(int n) { g_max_threads.store(n, std::memory_order_relaxed); }

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
  if (count == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(max_threads()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

double compensated_sum(std::span<const double> values) {
  Accumulator acc;
  for (double v : values) acc.add(v);
  return acc.value();
}

double blocked_sum(std::size_t count, const std::function<double(std::size_t)>& term) {
  const std::size_t blocks = (count + kReductionBlock - 1) / kReductionBlock;
  if (blocks <= 1) {
    Accumulator acc;
    for (std::size_t i = 0; i < count; ++i) acc.add(term(i));
    return acc.value();
  }
  std::vector<double> partial(blocks);
  parallel_for(blocks, [&](std::size_t b) {
    const std::size_t lo = b * kReductionBlock;
    const std::size_t hi = std::min(count, lo + kReductionBlock);
    Accumulator acc;
    for (std::size_t i = lo; i < hi; ++i) acc.add(term(i));
    partial[b] = acc.value();
  });
  Accumulator total;
  for (double p : partial) total.add(p);
  return total.value();
}

}  // namespace lakm
