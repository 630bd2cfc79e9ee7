/*
Copyright 2026 the skelbc authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace skelbc {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Work items are
/// pulled from a shared counter; fn must only touch state owned by item i.
/// The first exception thrown by any worker is rethrown on the caller.
template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (count == 0) return;
  if (threads <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::jthread> pool;
  const int extra = std::min<std::size_t>(threads, count) - 1;
  pool.reserve(extra);
  for (int t = 0; t < extra; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();  // joins
  if (error) std::rethrow_exception(error);
}

/// Parallel map over [0, count) followed by a strictly ordered fold: compute
/// fills slot i, fold consumes slots in ascending i. The fold order (and so
/// any floating-point accumulation) is identical for every worker count.
template <typename Slot, typename Compute, typename Fold>
void parallel_ordered_reduce(std::size_t count, int threads, Compute&& compute,
                             Fold&& fold) {
  constexpr std::size_t kBlock = 64;
  std::vector<Slot> slots(std::min(count, kBlock));
  for (std::size_t base = 0; base < count; base += kBlock) {
    const std::size_t chunk = std::min(kBlock, count - base);
    parallel_for(chunk, threads,
                 [&](std::size_t i) { compute(base + i, slots[i]); });
    for (std::size_t i = 0; i < chunk; ++i) fold(base + i, slots[i]);
  }
}

}  // namespace skelbc
