#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace riclab {

/// SplitMix64 finalizer; a high-quality 64-bit mixing function.
[[nodiscard]] constexpr uint64_t splitmix64_mix(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/**
 * @brief Derives the sub-stream seed for work item `index` from a master
 * seed. Streams for distinct indices are statistically independent, and the
 * mapping is a pure function, so any parallel schedule reproduces the same
 * per-item randomness.
 */
[[nodiscard]] constexpr uint64_t derive_stream(uint64_t seed, uint64_t index) {
  return splitmix64_mix(seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

/**
 * @brief Deterministic random generator: a fully specified engine
 * (mt19937_64) combined with hand-rolled samplers, so that identical seeds
 * give identical draws on every platform and standard library.
 *
 * std::normal_distribution and friends are implementation-defined and must
 * not be used where reproducibility is part of the contract.
 */
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  [[nodiscard]] uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  [[nodiscard]] double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Standard normal via the Marsaglia polar method (exact, no CLT shortcut).
  [[nodiscard]] double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double f = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * f;
    has_spare_ = true;
    return u * f;
  }

  /// Fair +-1 draw.
  [[nodiscard]] double rademacher() {
    return (engine_() >> 63) != 0 ? 1.0 : -1.0;
  }

  /// Unbiased uniform integer in [0, n) by rejection.
  [[nodiscard]] uint64_t bounded(uint64_t n) {
    if (n == 0) throw std::domain_error("Rng::bounded: n must be positive");
    const uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  /// Fisher-Yates shuffle driven by bounded().
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[bounded(i)]);
    }
  }

  /// r distinct indices uniformly from {0, ..., p-1}, returned sorted.
  [[nodiscard]] std::vector<int> sample_indices(int p, int r) {
    if (r < 0 || p < 0 || r > p) {
      throw std::domain_error("Rng::sample_indices: need 0 <= r <= p");
    }
    std::vector<int> idx(static_cast<size_t>(p));
    for (int i = 0; i < p; ++i) idx[static_cast<size_t>(i)] = i;
    for (int i = 0; i < r; ++i) {
      const auto j = static_cast<size_t>(i) +
                     bounded(static_cast<uint64_t>(p - i));
      std::swap(idx[static_cast<size_t>(i)], idx[j]);
    }
    idx.resize(static_cast<size_t>(r));
    std::sort(idx.begin(), idx.end());
    return idx;
  }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace riclab
