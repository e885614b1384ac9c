#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace chromagraph::detail {

// Runs body(task, worker) for task in [0, tasks) on up to `workers` threads.
// Tasks are handed out dynamically; the first exception thrown by any task is
// rethrown on the calling thread after all workers stop.
template <typename Body>
void parallel_for(std::size_t tasks, unsigned workers, Body&& body) {
  if (workers <= 1 || tasks <= 1) {
    for (std::size_t t = 0; t < tasks; ++t) body(t, 0u);
    return;
  }
  if (workers > tasks) workers = static_cast<unsigned>(tasks);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto run = [&](unsigned worker) {
    while (!stop.load(std::memory_order_relaxed)) {
      const std::size_t t = next.fetch_add(1, std::memory_order_relaxed);
      if (t >= tasks) break;
      try {
        body(t, worker);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        stop = true;
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(workers - 1);
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(run, w);
    run(0);
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace chromagraph::detail
