#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>

#include "riclab/parallel.hpp"
#include "riclab/rate_functions.hpp"
#include "riclab/ric_bounds.hpp"
#include "riclab/rng.hpp"

namespace riclab {

enum class EnsembleKind { gaussian, rademacher };

[[nodiscard]] inline const char* to_string(EnsembleKind k) {
  return k == EnsembleKind::gaussian ? "gaussian" : "rademacher";
}

/// A random-matrix law plus the master seed identifying the realization.
struct Ensemble {
  EnsembleKind kind = EnsembleKind::gaussian;
  uint64_t seed = 0;
};

/**
 * @brief Samples a rows x cols matrix with iid entries per the ensemble law,
 * filled row by row. Bit-identical for identical (seed, rows, cols).
 */
[[nodiscard]] inline Eigen::MatrixXd sample_matrix(const Ensemble& ensemble,
                                                   uint64_t rows,
                                                   uint64_t cols) {
  if (rows == 0 || cols == 0) {
    throw std::domain_error("sample_matrix: rows and cols must be positive");
  }
  Rng rng(ensemble.seed);
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows),
                    static_cast<Eigen::Index>(cols));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      m(i, j) = ensemble.kind == EnsembleKind::gaussian ? rng.gaussian()
                                                        : rng.rademacher();
    }
  }
  return m;
}

struct EigPair {
  double lambda_min;
  double lambda_max;
};

/**
 * @brief Extreme eigenvalues of a symmetric matrix (dense self-adjoint
 * solver). Rejects non-square, non-finite, or visibly asymmetric input.
 */
[[nodiscard]] inline EigPair extreme_eigs(const Eigen::MatrixXd& cov) {
  if (cov.rows() != cov.cols() || cov.rows() == 0) {
    throw std::invalid_argument("extreme_eigs: matrix must be square");
  }
  if (!cov.allFinite()) {
    throw std::invalid_argument("extreme_eigs: entries must be finite");
  }
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  const double asym = (cov - cov.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12 * scale) {
    throw std::invalid_argument("extreme_eigs: matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(cov,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::runtime_error("extreme_eigs: eigensolver failed");
  }
  const auto& ev = es.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

struct SingularPair {
  double sigma_min;
  double sigma_max;
};

/// Extreme singular values of a rectangular matrix.
[[nodiscard]] inline SingularPair extreme_singulars(
    const Eigen::MatrixXd& mat) {
  if (mat.rows() == 0 || mat.cols() == 0) {
    throw std::invalid_argument("extreme_singulars: matrix must be nonempty");
  }
  if (!mat.allFinite()) {
    throw std::invalid_argument("extreme_singulars: entries must be finite");
  }
  Eigen::BDCSVD<Eigen::MatrixXd> svd(mat);
  const auto& sv = svd.singularValues();
  return {sv(sv.size() - 1), sv(0)};
}

struct MpEdges {
  double lower;  ///< (1 - sqrt(rhobar))^2
  double upper;  ///< (1 + sqrt(rhobar))^2
};

/// Bulk edges of the Marchenko-Pastur law at aspect ratio rhobar.
[[nodiscard]] inline MpEdges mp_edges(double rhobar) {
  if (!(rhobar > 0.0 && rhobar < 1.0)) {
    throw std::domain_error("mp_edges: rhobar must lie in (0,1)");
  }
  const double sr = std::sqrt(rhobar);
  return {(1.0 - sr) * (1.0 - sr), (1.0 + sr) * (1.0 + sr)};
}

/// Which spectral tail the Monte Carlo event watches.
enum class Tail { largest, smallest, either };

[[nodiscard]] inline const char* to_string(Tail t) {
  switch (t) {
    case Tail::largest: return "largest";
    case Tail::smallest: return "smallest";
    case Tail::either: return "either";
  }
  return "?";
}

/// 95% Wilson score interval for a binomial proportion.
[[nodiscard]] inline std::pair<double, double> wilson_interval(
    uint64_t hits, uint64_t trials) {
  if (trials == 0) {
    throw std::domain_error("wilson_interval: trials must be positive");
  }
  constexpr double z = 1.959963984540054;  // 97.5% standard-normal quantile
  const double nT = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / nT;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / nT;
  const double center = (p + z2 / (2.0 * nT)) / denom;
  const double half =
      z * std::sqrt(p * (1.0 - p) / nT + z2 / (4.0 * nT * nT)) / denom;
  // The exact interval always contains p and lies inside [0,1]; clamping
  // removes the rounding noise that would otherwise break both facts at
  // hits = 0 and hits = trials.
  const double lo = std::max(0.0, std::min(center - half, p));
  const double hi = std::min(1.0, std::max(center + half, p));
  return {lo, hi};
}

/**
 * @brief Seeded Monte Carlo estimate of a spectral deviation probability.
 */
struct DeviationEstimate {
  uint64_t trials = 0;
  uint64_t hits = 0;
  double p_hat = 0.0;
  double ci_low = 0.0;   ///< 95% Wilson interval, lower end
  double ci_high = 0.0;  ///< 95% Wilson interval, upper end
  /// Closed-form probability bound when one is proved for this combination
  /// (Gaussian-style bound: ds model on the singular route); empty otherwise.
  std::optional<double> theory_bound;
  bool theory_vacuous = false;  ///< theory_bound present but >= 1
  double theory_exponent = 0.0;  ///< n * W(rhobar, t) for the chosen model
  double t = 0.0;
  double rhobar = 0.0;  ///< realized r/n
  uint64_t n = 0;
  uint64_t r = 0;
  Tail tail = Tail::either;
  Route route = Route::singular;
  RateModel model{};
};

/**
 * @brief Estimates Prob{selected spectral deviation >= t} over seeded trials.
 *
 * Each trial draws an r x n matrix X (r = floor(rhobar*n)), forms the sample
 * covariance C = (1/n) X X^T, and tests the tail event on either the
 * eigenvalues of C against the Marchenko-Pastur edges (eigen route) or the
 * scaled singular values sigma_i(X)/sqrt(n) = sqrt(lambda_i(C)) against
 * 1 +- sqrt(rhobar) (singular route). Trial i draws from the stream
 * derive_stream(seed, i), so results are independent of the parallel
 * schedule and reproduce byte-for-byte.
 */
[[nodiscard]] inline DeviationEstimate mc_deviation(
    const Ensemble& ensemble, uint64_t n, double rhobar, double t,
    uint64_t trials, Tail tail = Tail::either,
    const RateModel& model = RateModel::ds(), Route route = Route::singular) {
  if (n == 0) throw std::domain_error("mc_deviation: n must be positive");
  if (trials == 0) {
    throw std::domain_error("mc_deviation: trials must be positive");
  }
  if (!(rhobar > 0.0 && rhobar < 1.0)) {
    throw std::domain_error("mc_deviation: rhobar must lie in (0,1)");
  }
  if (!(t > 0.0)) {
    throw std::domain_error("mc_deviation: t must be positive");
  }
  // floor with a tiny nudge so exact products like 0.1*200 survive rounding
  const auto r = static_cast<uint64_t>(
      std::floor(rhobar * static_cast<double>(n) + 1e-9));
  if (r == 0) {
    throw std::domain_error("mc_deviation: floor(rhobar*n) must be >= 1");
  }
  if (r >= n) {
    throw std::domain_error("mc_deviation: floor(rhobar*n) must be < n");
  }
  const double rb = static_cast<double>(r) / static_cast<double>(n);
  const double sr = std::sqrt(rb);
  const MpEdges edges = mp_edges(rb);

  const auto chunk_hits = parallel_chunk_map<uint64_t>(
      trials, [&](uint64_t begin, uint64_t end) {
        uint64_t local = 0;
        for (uint64_t i = begin; i < end; ++i) {
          const Ensemble trial_ensemble{ensemble.kind,
                                        derive_stream(ensemble.seed, i)};
          const Eigen::MatrixXd x = sample_matrix(trial_ensemble, r, n);
          const Eigen::MatrixXd cov =
              (x * x.transpose()) / static_cast<double>(n);
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
              cov, Eigen::EigenvaluesOnly);
          const double lmin = es.eigenvalues()(0);
          const double lmax =
              es.eigenvalues()(static_cast<Eigen::Index>(r) - 1);
          double dev_large, dev_small;
          if (route == Route::eigen) {
            dev_large = lmax - edges.upper;
            dev_small = edges.lower - lmin;
          } else {
            dev_large = std::sqrt(std::max(lmax, 0.0)) - (1.0 + sr);
            dev_small = (1.0 - sr) - std::sqrt(std::max(lmin, 0.0));
          }
          const bool hit = tail == Tail::largest ? dev_large >= t
                           : tail == Tail::smallest
                               ? dev_small >= t
                               : std::max(dev_large, dev_small) >= t;
          if (hit) ++local;
        }
        return local;
      });

  DeviationEstimate est;
  est.trials = trials;
  for (const uint64_t h : chunk_hits) est.hits += h;
  est.p_hat = static_cast<double>(est.hits) / static_cast<double>(trials);
  const auto ci = wilson_interval(est.hits, trials);
  est.ci_low = ci.first;
  est.ci_high = ci.second;
  est.theory_exponent = static_cast<double>(n) * rate(model, rb, t);
  if (model.kind == RateKind::ds && route == Route::singular) {
    const double factor = tail == Tail::either ? 2.0 : 1.0;
    est.theory_bound = factor * std::exp(-est.theory_exponent);
    est.theory_vacuous = *est.theory_bound >= 1.0;
  }
  est.t = t;
  est.rhobar = rb;
  est.n = n;
  est.r = r;
  est.tail = tail;
  est.route = route;
  est.model = model;
  return est;
}

}  // namespace riclab
