#pragma once

// Runs produce(i) for i in [0, n) on a bounded set of threads and hands the
// results to consume(i, result) strictly in index order, on the calling
// thread. At most `window` results are held at once.

#include <algorithm>
#include <condition_variable>
#include <cstddef>
#include <exception>
#include <map>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace equilab::driver {

template <typename Produce, typename Consume>
void ordered_parallel(std::size_t n, unsigned threads, Produce produce, Consume consume) {
  using Result = decltype(produce(std::size_t{0}));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) consume(i, produce(i));
    return;
  }
  const std::size_t window = 4 * static_cast<std::size_t>(threads);
  std::mutex mu;
  std::condition_variable cv;
  std::map<std::size_t, Result> ready;
  std::size_t next_task = 0, next_out = 0;
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      std::size_t i;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return error || next_task >= n || next_task < next_out + window; });
        if (error || next_task >= n) return;
        i = next_task++;
      }
      try {
        Result r = produce(i);
        std::lock_guard<std::mutex> lock(mu);
        ready.emplace(i, std::move(r));
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  try {
    while (next_out < n) {
      std::optional<Result> r;
      {
        std::unique_lock<std::mutex> lock(mu);
        cv.wait(lock, [&] { return error || ready.count(next_out) != 0; });
        if (error) break;
        auto it = ready.find(next_out);
        r.emplace(std::move(it->second));
        ready.erase(it);
      }
      consume(next_out, std::move(*r));
      {
        std::lock_guard<std::mutex> lock(mu);
        ++next_out;
      }
      cv.notify_all();
    }
  } catch (...) {
    std::lock_guard<std::mutex> lock(mu);
    if (!error) error = std::current_exception();
  }
  cv.notify_all();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace equilab::driver
