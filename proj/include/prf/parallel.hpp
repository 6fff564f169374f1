#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace prf {

// Number of workers used by every parallel sweep. Defaults to the hardware
// concurrency; results never depend on it.
unsigned worker_count();
void set_worker_count(unsigned n);

// Runs fn(begin, end, worker) on contiguous slices of [0, count).
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  unsigned workers = std::max(1u, worker_count());
  if (workers == 1 || count < 2) {
    fn(std::size_t{0}, count, 0u);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, count));
  std::vector<std::thread> threads;
  std::exception_ptr error;
  std::mutex error_mutex;
  std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = w * chunk;
    std::size_t end = std::min(count, begin + chunk);
    if (begin >= end) break;
    threads.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace prf
