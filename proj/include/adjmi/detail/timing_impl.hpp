#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <vector>

namespace adjmi {

namespace detail {

template <class T>
inline void do_not_optimize(const T& value) {
  asm volatile("" : : "r,m"(value) : "memory");
}

}  // namespace detail

template <class Fn>
TimingSample time_call(Fn&& fn, std::size_t repetitions, double min_batch_seconds) {
  using clock = std::chrono::steady_clock;
  const auto seconds_since = [](clock::time_point t0) {
    return std::chrono::duration<double>(clock::now() - t0).count();
  };

  // Warm-up, also sizes the batch.
  auto t0 = clock::now();
  detail::do_not_optimize(fn());
  const double single = std::max(seconds_since(t0), 1e-9);
  const auto calls = static_cast<std::size_t>(
      std::max(1.0, std::ceil(min_batch_seconds / single)));

  std::vector<double> per_call;
  per_call.reserve(repetitions);
  for (std::size_t r = 0; r < repetitions; ++r) {
    t0 = clock::now();
    for (std::size_t c = 0; c < calls; ++c) detail::do_not_optimize(fn());
    per_call.push_back(seconds_since(t0) / static_cast<double>(calls));
  }

  TimingSample out;
  out.calls_per_repetition = calls;
  out.mean = std::accumulate(per_call.begin(), per_call.end(), 0.0) /
             static_cast<double>(per_call.size());
  double var = 0;
  for (double v : per_call) var += (v - out.mean) * (v - out.mean);
  out.std = per_call.size() > 1 ? std::sqrt(var / static_cast<double>(per_call.size() - 1)) : 0;
  std::sort(per_call.begin(), per_call.end());
  const std::size_t mid = per_call.size() / 2;
  out.median = per_call.size() % 2 ? per_call[mid] : 0.5 * (per_call[mid - 1] + per_call[mid]);
  return out;
}

}  // namespace adjmi
