#include "uct/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace uct {
namespace {

std::atomic<unsigned> g_threads{0};
// Set on worker threads so nested loops run inline instead of spawning more workers.
thread_local bool t_inside_parallel = false;

}  // namespace

void set_thread_count(unsigned threads) noexcept { g_threads.store(threads); }

unsigned thread_count() noexcept {
  unsigned t = g_threads.load();
  if (t == 0) t = std::max(1u, std::thread::hardware_concurrency());
  return t;
}

void parallel_for(std::size_t begin, std::size_t end, const std::function<void(std::size_t)>& body) {
  if (end <= begin) return;
  const std::size_t count = end - begin;
  const std::size_t workers = std::min<std::size_t>(thread_count(), count);
  if (workers <= 1 || t_inside_parallel) {
    for (std::size_t i = begin; i < end; ++i) body(i);
    return;
  }

  // Small chunks keep the load balanced when per-index cost varies (triameter rows shrink).
  const std::size_t chunk = std::max<std::size_t>(1, count / (workers * 8));
  std::atomic<std::size_t> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    const bool was_inside = t_inside_parallel;
    t_inside_parallel = true;
    struct Restore {
      bool value;
      ~Restore() { t_inside_parallel = value; }
    } restore{was_inside};
    for (;;) {
      std::size_t start = next.fetch_add(chunk);
      if (start >= end) return;
      std::size_t stop = std::min(end, start + chunk);
      try {
        for (std::size_t i = start; i < stop; ++i) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(end);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace uct
