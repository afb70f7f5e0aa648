#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace riclab {

/**
 * @brief Parallelism cap: the value of RICLAB_THREADS when it is a valid
 * positive integer, otherwise the hardware concurrency (at least 1).
 */
[[nodiscard]] inline unsigned max_threads() {
  if (const char* env = std::getenv("RICLAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      return static_cast<unsigned>(std::min<long>(v, 4096));
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace detail {

/// Number of chunks used for `total` work items: min(cap, total), at least 1.
[[nodiscard]] inline uint64_t chunk_count(uint64_t total) {
  return std::max<uint64_t>(
      1, std::min<uint64_t>(max_threads(), std::max<uint64_t>(total, 1)));
}

/// Runs worker(chunk_begin, chunk_end, chunk_index) for k chunks statically
/// partitioning [0, total); rethrows the first chunk exception in chunk order.
template <class Worker>
void run_chunked(uint64_t total, uint64_t k, Worker&& worker) {
  if (total == 0) return;
  std::vector<std::exception_ptr> errors(k);
  auto body = [&](uint64_t c) {
    try {
      worker(total * c / k, total * (c + 1) / k, c);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(k - 1));
  for (uint64_t c = 1; c < k; ++c) pool.emplace_back(body, c);
  body(0);
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace detail

/**
 * @brief Splits [0, total) into contiguous chunks (at most max_threads() of
 * them) and collects one partial result per chunk, in chunk order.
 *
 * Determinism contract: the chunking depends on the thread cap, so callers
 * must only fold the partials with associative, commutative, exactly
 * representable operations (integer sums, min, max); floating-point
 * accumulation across chunks is not reproducible and is forbidden here.
 */
template <class R, class Worker>
[[nodiscard]] std::vector<R> parallel_chunk_map(uint64_t total,
                                                Worker worker) {
  const uint64_t k = detail::chunk_count(total);
  std::vector<R> out(total == 0 ? 0 : static_cast<size_t>(k));
  detail::run_chunked(total, k, [&](uint64_t b, uint64_t e, uint64_t c) {
    out[static_cast<size_t>(c)] = worker(b, e);
  });
  return out;
}

/**
 * @brief Calls fn(i) exactly once for every i in [0, total), possibly from
 * several threads. fn must only touch state indexed by i (per-item stores),
 * which keeps results independent of the schedule.
 */
template <class Fn>
void parallel_for_index(uint64_t total, Fn fn) {
  detail::run_chunked(total, detail::chunk_count(total),
                      [&](uint64_t b, uint64_t e, uint64_t) {
                        for (uint64_t i = b; i < e; ++i) fn(i);
                      });
}

}  // namespace riclab
