#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "riclab/errors.hpp"
#include "riclab/parallel.hpp"
#include "riclab/random_matrix.hpp"
#include "riclab/rng.hpp"

namespace riclab {

/// Hard cap on the number of supports an exhaustive scan may enumerate.
inline constexpr uint64_t kRicSubsetBudget = 10'000'000;

/// Exhaustive enumeration of all C(p, r) supports, or k supports sampled
/// uniformly with replacement (a lower bound on the true constants).
struct RicSampleMode {
  enum class Kind { exhaustive, sampled };
  Kind kind = Kind::exhaustive;
  uint64_t samples = 0;

  [[nodiscard]] static RicSampleMode exhaustive() { return {}; }
  [[nodiscard]] static RicSampleMode sampled(uint64_t k) {
    return {Kind::sampled, k};
  }
};

/// Empirical restricted-isometry constants of one sampled matrix.
struct EmpiricalRic {
  uint64_t n = 0;
  uint64_t p = 0;
  uint64_t r = 0;
  double c_min_hat = 0.0;
  double c_max_hat = 0.0;
  uint64_t subsets_evaluated = 0;
  bool exhaustive = false;  ///< false means the values are only lower bounds
};

namespace detail {

/// C(p, r), saturating at cap + 1 (exact whenever the result is <= cap).
[[nodiscard]] inline uint64_t binomial_capped(uint64_t p, uint64_t r,
                                              uint64_t cap) {
  if (r > p) return 0;
  r = std::min(r, p - r);
  unsigned __int128 c = 1;
  for (uint64_t i = 1; i <= r; ++i) {
    c = c * (p - r + i) / i;  // exact: C(p-r+i, i) is an integer
    if (c > cap) return cap + 1;
  }
  return static_cast<uint64_t>(c);
}

/// Lexicographically smallest combination of given rank (combinatorial
/// number system); all counts involved are <= C(p, r) and fit easily.
[[nodiscard]] inline std::vector<int> unrank_combination(uint64_t p,
                                                         uint64_t r,
                                                         uint64_t rank,
                                                         uint64_t cap) {
  std::vector<int> c(r);
  uint64_t v = 0;
  for (uint64_t j = 0; j < r; ++j) {
    for (;; ++v) {
      const uint64_t count = binomial_capped(p - 1 - v, r - 1 - j, cap);
      if (rank < count) break;
      rank -= count;
    }
    c[j] = static_cast<int>(v);
    ++v;
  }
  return c;
}

/// Advances an ascending combination to its lexicographic successor.
[[nodiscard]] inline bool next_combination(std::vector<int>& c, uint64_t p) {
  const auto r = static_cast<int>(c.size());
  int i = r - 1;
  while (i >= 0 &&
         c[static_cast<size_t>(i)] == static_cast<int>(p) - r + i) {
    --i;
  }
  if (i < 0) return false;
  ++c[static_cast<size_t>(i)];
  for (int j = i + 1; j < r; ++j) {
    c[static_cast<size_t>(j)] = c[static_cast<size_t>(j - 1)] + 1;
  }
  return true;
}

/// Extreme eigenvalues of the Gram matrix of the selected columns of m.
[[nodiscard]] inline std::pair<double, double> support_spectrum(
    const Eigen::MatrixXd& m, const std::vector<int>& support) {
  const auto r = static_cast<Eigen::Index>(support.size());
  Eigen::MatrixXd cols(m.rows(), r);
  for (Eigen::Index j = 0; j < r; ++j) {
    cols.col(j) = m.col(support[static_cast<size_t>(j)]);
  }
  const Eigen::MatrixXd gram = cols.transpose() * cols;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram,
                                                    Eigen::EigenvaluesOnly);
  return {es.eigenvalues()(0), es.eigenvalues()(r - 1)};
}

}  // namespace detail

/**
 * @brief Empirical RIC of an explicit (already normalized) matrix m:
 * c_max_hat = max(0, max_R lambda_max(m_R^T m_R) - 1) and
 * c_min_hat = max(0, 1 - min_R lambda_min(m_R^T m_R)) over supports R of
 * size r. The exhaustive mode is an exact computation (within eigensolver
 * accuracy); the sampled mode only lower-bounds both constants and draws
 * its supports from the streams derive_stream(sample_seed, i).
 */
[[nodiscard]] inline EmpiricalRic empirical_ric_of_matrix(
    const Eigen::MatrixXd& m, uint64_t r,
    const RicSampleMode& mode = RicSampleMode::exhaustive(),
    uint64_t sample_seed = 0) {
  if (m.rows() == 0 || m.cols() == 0) {
    throw std::domain_error("empirical_ric: matrix must be nonempty");
  }
  if (!m.allFinite()) {
    throw std::domain_error("empirical_ric: entries must be finite");
  }
  const auto n = static_cast<uint64_t>(m.rows());
  const auto p = static_cast<uint64_t>(m.cols());
  if (r == 0 || r > p) {
    throw std::domain_error("empirical_ric: need 1 <= r <= p");
  }

  uint64_t total;
  const uint64_t n_subsets = detail::binomial_capped(p, r, kRicSubsetBudget);
  if (mode.kind == RicSampleMode::Kind::exhaustive) {
    if (n_subsets > kRicSubsetBudget) {
      throw budget_error(
          "empirical_ric: C(p,r) exceeds the exhaustive-subset budget of " +
          std::to_string(kRicSubsetBudget));
    }
    total = n_subsets;
  } else {
    if (mode.samples == 0) {
      throw std::domain_error("empirical_ric: sampled mode needs k >= 1");
    }
    total = mode.samples;
  }

  struct Extremes {
    double min_eig = std::numeric_limits<double>::infinity();
    double max_eig = -std::numeric_limits<double>::infinity();
  };
  const auto partials = parallel_chunk_map<Extremes>(
      total, [&](uint64_t begin, uint64_t end) {
        Extremes ex;
        if (mode.kind == RicSampleMode::Kind::exhaustive) {
          std::vector<int> support =
              detail::unrank_combination(p, r, begin, kRicSubsetBudget);
          for (uint64_t i = begin; i < end; ++i) {
            const auto [lo, hi] = detail::support_spectrum(m, support);
            ex.min_eig = std::min(ex.min_eig, lo);
            ex.max_eig = std::max(ex.max_eig, hi);
            if (i + 1 < end && !detail::next_combination(support, p)) break;
          }
        } else {
          for (uint64_t i = begin; i < end; ++i) {
            Rng rng(derive_stream(sample_seed, i));
            const auto support =
                rng.sample_indices(static_cast<int>(p), static_cast<int>(r));
            const auto [lo, hi] = detail::support_spectrum(m, support);
            ex.min_eig = std::min(ex.min_eig, lo);
            ex.max_eig = std::max(ex.max_eig, hi);
          }
        }
        return ex;
      });

  Extremes all;
  for (const auto& ex : partials) {
    all.min_eig = std::min(all.min_eig, ex.min_eig);
    all.max_eig = std::max(all.max_eig, ex.max_eig);
  }

  EmpiricalRic out;
  out.n = n;
  out.p = p;
  out.r = r;
  out.c_min_hat = std::max(0.0, 1.0 - all.min_eig);
  out.c_max_hat = std::max(0.0, all.max_eig - 1.0);
  out.subsets_evaluated = total;
  out.exhaustive = mode.kind == RicSampleMode::Kind::exhaustive;
  return out;
}

/**
 * @brief Empirical RIC of M = X/sqrt(n) with X an n x p sample from the
 * ensemble. Sampled-mode supports derive from the ensemble seed.
 */
[[nodiscard]] inline EmpiricalRic empirical_ric(
    const Ensemble& ensemble, uint64_t n, uint64_t p, uint64_t r,
    const RicSampleMode& mode = RicSampleMode::exhaustive()) {
  if (n == 0) throw std::domain_error("empirical_ric: n must be positive");
  if (p == 0) throw std::domain_error("empirical_ric: p must be positive");
  const Eigen::MatrixXd m =
      sample_matrix(ensemble, n, p) / std::sqrt(static_cast<double>(n));
  return empirical_ric_of_matrix(m, r, mode, ensemble.seed);
}

/// The empirical RIC pair as input for the condition-ratio helpers.
[[nodiscard]] inline RicPair ric_pair(const EmpiricalRic& e) {
  return {e.c_min_hat, e.c_max_hat};
}

}  // namespace riclab
