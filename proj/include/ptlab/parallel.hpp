#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace ptlab {

// Splits [0, count) into `workers` contiguous ranges and runs
// fn(begin, end, worker_index) on each, rethrowing the first exception.
template <typename Fn>
void parallel_ranges(std::uint64_t count, int workers, Fn&& fn) {
  const std::uint64_t w = std::clamp<std::uint64_t>(workers < 1 ? 1 : workers, 1, std::max<std::uint64_t>(count, 1));
  if (w == 1) {
    fn(std::uint64_t{0}, count, 0);
    return;
  }
  std::vector<std::exception_ptr> errors(w);
  std::vector<std::thread> threads;
  threads.reserve(w);
  for (std::uint64_t i = 0; i < w; ++i) {
    const std::uint64_t begin = count * i / w;
    const std::uint64_t end = count * (i + 1) / w;
    threads.emplace_back([&, i, begin, end] {
      try {
        fn(begin, end, static_cast<int>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace ptlab
