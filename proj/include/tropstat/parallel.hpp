#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "tropstat/random.hpp"

namespace tropstat {

/// Runs `trials` independent trials of `fn(Rng&, trial_index)` on up to
/// `threads` workers. Trial k always sees the stream
/// derive_seed(master_seed, tag, k) and its result lands in slot k, so the
/// output does not depend on the thread count or on scheduling.
template <class Fn>
auto run_trials(std::size_t trials, std::uint64_t master_seed,
                std::uint64_t tag, unsigned threads, Fn&& fn) {
  using Result = decltype(fn(std::declval<Rng&>(), std::size_t{}));
  std::vector<Result> results(trials);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1, std::memory_order_relaxed);
      if (k >= trials) return;
      try {
        Rng rng(derive_seed(master_seed, tag, k));
        results[k] = fn(rng, k);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(trials);
        return;
      }
    }
  };

  const unsigned n_workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), trials));
  if (n_workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace tropstat
