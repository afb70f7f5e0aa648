#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "riclab/empirical_ric.hpp"
#include "riclab/parallel.hpp"
#include "riclab/random_matrix.hpp"
#include "riclab/ric_bounds.hpp"
#include "riclab/rng.hpp"

namespace riclab {

/**
 * @brief Best s-term approximation error in l1: the sum of the p - s
 * smallest entry magnitudes of x. Tie-invariant by construction.
 */
[[nodiscard]] inline double sigma_s(const Eigen::VectorXd& x, uint64_t s) {
  const auto p = static_cast<uint64_t>(x.size());
  if (s > p) throw std::domain_error("sigma_s: s must not exceed dim(x)");
  if (s == p) return 0.0;
  std::vector<double> mags(p);
  for (uint64_t i = 0; i < p; ++i) {
    mags[i] = std::abs(x(static_cast<Eigen::Index>(i)));
  }
  std::sort(mags.begin(), mags.end());
  double sum = 0.0;
  for (uint64_t i = 0; i < p - s; ++i) sum += mags[i];
  return sum;
}

enum class SolveStatus { ok, max_iter, infeasible };

[[nodiscard]] inline const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::ok: return "ok";
    case SolveStatus::max_iter: return "max_iter";
    case SolveStatus::infeasible: return "infeasible";
  }
  return "?";
}

/// One constrained l1 problem: minimize |x|_1 subject to |y - Mx|_2 <= eta.
struct RecoveryInstance {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd y;
  double eta = 0.0;
  std::optional<Eigen::VectorXd> x0;  ///< ground truth, when known
  std::optional<uint64_t> s;          ///< target sparsity, when known
};

struct SolverOptions {
  double tol_feas = 1e-8;
  double tol_opt = 1e-6;
  uint64_t max_iter = 50000;
};

struct RecoveryResult {
  Eigen::VectorXd x_hat;
  double feasibility_residual = 0.0;  ///< max(0, |y - M x_hat|_2 - eta)
  double objective = 0.0;             ///< |x_hat|_1
  double optimality_gap = 0.0;        ///< objective minus a certified dual value
  uint64_t iterations = 0;
  SolveStatus status = SolveStatus::ok;
};

namespace detail {

/// Euclidean projector onto {x : |Mx - y|_2 <= eta} (affine set when
/// eta = 0). Shares one matrix factorization across all calls.
class FeasibleProjector {
 public:
  FeasibleProjector(const Eigen::MatrixXd& m, const Eigen::VectorXd& y,
                    double eta)
      : m_(m), y_(y), eta_(eta), cod_(m) {
    if (eta_ > 0.0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m * m.transpose());
      q_ = es.eigenvectors();
      lam_ = es.eigenvalues();
    }
  }

  /// Minimal-norm least-squares solution of M x = y.
  [[nodiscard]] Eigen::VectorXd least_squares(const Eigen::VectorXd& y) const {
    return cod_.solve(y);
  }

  [[nodiscard]] Eigen::VectorXd operator()(const Eigen::VectorXd& v) const {
    Eigen::VectorXd b = m_ * v - y_;
    const double bn = b.norm();
    if (bn <= eta_) return v;
    if (eta_ == 0.0) return v - cod_.solve(b);

    const Eigen::VectorXd bt = q_.transpose() * b;
    const double eta2 = eta_ * eta_;
    auto phi = [&](double mu) {
      double s = 0.0;
      for (Eigen::Index i = 0; i < bt.size(); ++i) {
        const double d = 1.0 + mu * lam_(i);
        s += bt(i) * bt(i) / (d * d);
      }
      return s;
    };
    auto dphi = [&](double mu) {
      double s = 0.0;
      for (Eigen::Index i = 0; i < bt.size(); ++i) {
        const double d = 1.0 + mu * lam_(i);
        s += bt(i) * bt(i) * lam_(i) / (d * d * d);
      }
      return -2.0 * s;
    };
    // phi is strictly decreasing from |b|^2 > eta^2; bracket the root.
    double lo = 0.0, hi = 1.0;
    int guard = 0;
    while (phi(hi) > eta2 && guard++ < 256) hi *= 4.0;
    if (phi(hi) > eta2) {
      // numerically rank-deficient direction carries more than eta of the
      // misfit; fall back to the least-squares projection (mu -> inf limit)
      return v - cod_.solve(b);
    }
    double mu = 0.5 * hi;
    for (int iter = 0; iter < 200; ++iter) {
      const double val = phi(mu) - eta2;
      if (std::abs(val) <= 1e-14 * eta2) break;
      if (val > 0.0) {
        lo = mu;
      } else {
        hi = mu;
      }
      const double der = dphi(mu);
      double next = der < 0.0 ? mu - val / der : lo;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (hi - lo <= 1e-16 * std::max(1.0, hi)) break;
      mu = next;
    }
    const Eigen::VectorXd scaled =
        (bt.array() / (1.0 + mu * lam_.array())).matrix();
    return v - mu * (m_.transpose() * (q_ * scaled));
  }

 private:
  const Eigen::MatrixXd& m_;
  const Eigen::VectorXd& y_;
  double eta_;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod_;
  Eigen::MatrixXd q_;
  Eigen::VectorXd lam_;
};

[[nodiscard]] inline Eigen::VectorXd soft_threshold(const Eigen::VectorXd& v,
                                                    double k) {
  return v.unaryExpr([k](double a) {
    return a > k ? a - k : (a < -k ? a + k : 0.0);
  });
}

}  // namespace detail

/**
 * @brief Solves min |x|_1 s.t. |y - Mx|_2 <= eta by ADMM splitting between
 * the l1 term and the constraint set, then certifies the answer: the
 * returned iterate is feasible by construction (it is a projection output)
 * and optimality_gap comes from an explicitly constructed dual feasible
 * point nu with |M^T nu|_inf <= 1, whose dual value y.nu - eta |nu|_2 lower
 * bounds the optimum.
 *
 * For eta = 0 a support least-squares polish is applied when it preserves
 * feasibility and does not increase the objective, which turns
 * near-converged iterates into vertex-exact solutions.
 */
[[nodiscard]] inline RecoveryResult l1_solve(const RecoveryInstance& inst,
                                             const SolverOptions& opt = {}) {
  const Eigen::MatrixXd& m = inst.matrix;
  const Eigen::VectorXd& y = inst.y;
  if (m.rows() != y.size()) {
    throw std::invalid_argument("l1_solve: matrix rows must match dim(y)");
  }
  if (m.rows() == 0 || m.cols() == 0) {
    throw std::invalid_argument("l1_solve: matrix must be nonempty");
  }
  if (!m.allFinite() || !y.allFinite()) {
    throw std::invalid_argument("l1_solve: inputs must be finite");
  }
  if (!(inst.eta >= 0.0)) {
    throw std::domain_error("l1_solve: eta must be nonnegative");
  }
  const auto p = m.cols();

  RecoveryResult res;
  if (y.norm() <= inst.eta) {  // zero is feasible, hence optimal
    res.x_hat = Eigen::VectorXd::Zero(p);
    return res;
  }

  detail::FeasibleProjector proj(m, y, inst.eta);
  const Eigen::VectorXd x_ls = proj.least_squares(y);
  const double dist = (m * x_ls - y).norm();
  if (dist > inst.eta + opt.tol_feas) {
    res.x_hat = x_ls;
    res.feasibility_residual = dist - inst.eta;
    res.objective = x_ls.lpNorm<1>();
    res.optimality_gap = std::numeric_limits<double>::infinity();
    res.status = SolveStatus::infeasible;
    return res;
  }

  Eigen::VectorXd w = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd u = Eigen::VectorXd::Zero(p);
  Eigen::VectorXd x = Eigen::VectorXd::Zero(p);
  double rho = 1.0;
  constexpr double eps_abs = 1e-12;
  constexpr double eps_rel = 1e-12;
  const double sqrt_p = std::sqrt(static_cast<double>(p));
  bool converged = false;
  uint64_t it = 0;
  while (it < opt.max_iter) {
    ++it;
    x = proj(w - u);
    const Eigen::VectorXd w_old = w;
    w = detail::soft_threshold(x + u, 1.0 / rho);
    u += x - w;
    const double r_norm = (x - w).norm();
    const double s_norm = rho * (w - w_old).norm();
    const double eps_pri =
        sqrt_p * eps_abs + eps_rel * std::max(x.norm(), w.norm());
    const double eps_dual = sqrt_p * eps_abs + eps_rel * rho * u.norm();
    if (r_norm <= eps_pri && s_norm <= eps_dual) {
      converged = true;
      break;
    }
    if ((it & 7) == 0) {  // keep residuals balanced; u is the scaled dual
      if (r_norm > 10.0 * s_norm && rho < 1e8) {
        rho *= 2.0;
        u *= 0.5;
      } else if (s_norm > 10.0 * r_norm && rho > 1e-8) {
        rho *= 0.5;
        u *= 2.0;
      }
    }
  }
  res.iterations = it;
  res.status = converged ? SolveStatus::ok : SolveStatus::max_iter;

  const double x_inf = x.lpNorm<Eigen::Infinity>();
  const double support_tol = 1e-8 * std::max(1.0, x_inf);

  if (inst.eta == 0.0) {
    std::vector<Eigen::Index> support;
    for (Eigen::Index i = 0; i < p; ++i) {
      if (std::abs(x(i)) > support_tol) support.push_back(i);
    }
    if (!support.empty()) {
      Eigen::MatrixXd ms(m.rows(), static_cast<Eigen::Index>(support.size()));
      for (size_t j = 0; j < support.size(); ++j) {
        ms.col(static_cast<Eigen::Index>(j)) = m.col(support[j]);
      }
      Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod_s(ms);
      const Eigen::VectorXd z = cod_s.solve(y);
      const double resid = (ms * z - y).norm();
      const double obj_x = x.lpNorm<1>();
      if (resid <= opt.tol_feas &&
          z.lpNorm<1>() <= obj_x + 1e-12 * std::max(1.0, obj_x)) {
        x.setZero();
        for (size_t j = 0; j < support.size(); ++j) {
          x(support[j]) = z(static_cast<Eigen::Index>(j));
        }
      }
    }
  }

  // Dual certificate: pick a subgradient candidate g of |.|_1 at x, find nu
  // with M^T nu closest to g, force dual feasibility by rescaling, and use
  // the dual objective as a lower bound on the optimum.
  Eigen::VectorXd g(p);
  for (Eigen::Index i = 0; i < p; ++i) {
    if (std::abs(x(i)) > support_tol) {
      g(i) = x(i) > 0.0 ? 1.0 : -1.0;
    } else {
      g(i) = std::clamp(rho * u(i), -1.0, 1.0);
    }
  }
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod_t(
      Eigen::MatrixXd(m.transpose()));
  Eigen::VectorXd nu = cod_t.solve(g);
  const double dual_inf = (m.transpose() * nu).lpNorm<Eigen::Infinity>();
  if (dual_inf > 1.0) nu /= dual_inf;
  const double dual_value = y.dot(nu) - inst.eta * nu.norm();

  res.x_hat = x;
  res.objective = x.lpNorm<1>();
  res.feasibility_residual = std::max(0.0, (m * x - y).norm() - inst.eta);
  res.optimality_gap = std::max(0.0, res.objective - dual_value);
  return res;
}

/// Normalized recovery-error ratios; infinite ratios signal that stable
/// recovery demanded exactness (zero denominators) but the error was not
/// negligible.
struct SrsrRatios {
  double r1 = 0.0;
  double r2 = 0.0;
  bool exact_recovery = false;
  bool unbounded = false;
};

/**
 * @brief r1 = |x0 - x_hat|_1 / (sigma_s(x0) + sqrt(s) eta) and
 * r2 = |x0 - x_hat|_2 / (sigma_s(x0)/sqrt(s) + eta). When both denominators
 * vanish (x0 s-sparse and eta = 0), returns the exact-recovery flag if the
 * error is below 1e-6 relative, otherwise flags the ratios as unbounded.
 */
[[nodiscard]] inline SrsrRatios srsr_errors(const Eigen::VectorXd& x0,
                                            const Eigen::VectorXd& x_hat,
                                            uint64_t s, double eta) {
  if (s == 0) throw std::domain_error("srsr_errors: s must be >= 1");
  if (x0.size() != x_hat.size()) {
    throw std::invalid_argument("srsr_errors: dimension mismatch");
  }
  if (!(eta >= 0.0)) {
    throw std::domain_error("srsr_errors: eta must be nonnegative");
  }
  const double num1 = (x0 - x_hat).lpNorm<1>();
  const double num2 = (x0 - x_hat).norm();
  const double sig = sigma_s(x0, s);
  const double rs = std::sqrt(static_cast<double>(s));
  const double den1 = sig + rs * eta;
  const double den2 = sig / rs + eta;

  SrsrRatios out;
  out.exact_recovery = num2 <= 1e-6 * std::max(1.0, x0.norm());
  if (den1 > 0.0) {
    out.r1 = num1 / den1;
    out.r2 = num2 / den2;
  } else if (out.exact_recovery) {
    out.r1 = 0.0;
    out.r2 = 0.0;
  } else {
    out.r1 = std::numeric_limits<double>::infinity();
    out.r2 = std::numeric_limits<double>::infinity();
    out.unbounded = true;
  }
  return out;
}

/// Full experiment description; every output is a pure function of this.
struct SrsrExperimentConfig {
  EnsembleKind kind = EnsembleKind::gaussian;
  uint64_t seed = 0;
  uint64_t n = 0;
  uint64_t p = 0;
  uint64_t s = 0;
  double eta = 0.0;
  double noise_level = 0.0;
  uint64_t trials = 1;
  bool ric_precheck = false;  ///< exhaustive empirical RIC at order 2s
  SolverOptions solver{};
  /// When set, every trial uses this fixed matrix instead of a sampled one.
  std::optional<Eigen::MatrixXd> fixed_matrix;
};

struct SrsrTrial {
  bool exact_recovery = false;
  double err_l1 = 0.0;
  double err_l2 = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  bool unbounded = false;
  bool noise_rescaled = false;
  double objective = 0.0;
  double feasibility_residual = 0.0;
  double optimality_gap = 0.0;
  uint64_t iterations = 0;
  SolveStatus status = SolveStatus::ok;
  std::optional<double> gamma;   ///< condition ratio of the empirical RIC
  std::optional<bool> ric_pass;  ///< srsr_condition_holds on the empirical RIC
};

struct SrsrExperimentSummary {
  SrsrExperimentConfig config;
  uint64_t trials = 0;
  uint64_t exact_recoveries = 0;
  double success_rate = 0.0;
  std::optional<double> max_r1;  ///< over trials with finite ratios
  std::optional<double> max_r2;
  uint64_t unbounded_ratio_trials = 0;
  uint64_t rescaled_noise_trials = 0;
  uint64_t ric_checked_trials = 0;
  uint64_t ric_pass_trials = 0;
  uint64_t ric_pass_and_recovered = 0;
  /// Every trial whose empirical RIC satisfies the condition ratio test
  /// recovered exactly (vacuously true when none passes or no precheck ran).
  bool implication_holds = true;
  std::vector<SrsrTrial> trial_records;
};

/**
 * @brief Seeded end-to-end recovery experiment: per trial, sample a matrix
 * (or reuse config.fixed_matrix), plant an s-sparse Gaussian signal, add
 * bounded noise, solve the l1 program, and report error ratios; optionally
 * cross-check the condition-ratio criterion against observed recovery.
 *
 * Stream layout: trial i derives trial_seed = derive_stream(seed, i), and
 * within the trial, purpose streams derive_stream(trial_seed, 0/1/2) for
 * matrix, signal, noise. The matrix stream doubles as the Ensemble seed for
 * the RIC precheck, which therefore analyzes the identical matrix.
 */
[[nodiscard]] inline SrsrExperimentSummary srsr_experiment(
    const SrsrExperimentConfig& config) {
  if (config.n == 0 || config.p == 0) {
    throw std::domain_error("srsr_experiment: n and p must be positive");
  }
  if (config.s == 0 || config.s > config.p) {
    throw std::domain_error("srsr_experiment: need 1 <= s <= p");
  }
  if (config.trials == 0) {
    throw std::domain_error("srsr_experiment: trials must be positive");
  }
  if (!(config.eta >= 0.0) || !(config.noise_level >= 0.0)) {
    throw std::domain_error(
        "srsr_experiment: eta and noise_level must be nonnegative");
  }
  if (config.fixed_matrix &&
      (config.fixed_matrix->rows() != static_cast<Eigen::Index>(config.n) ||
       config.fixed_matrix->cols() != static_cast<Eigen::Index>(config.p))) {
    throw std::invalid_argument("srsr_experiment: fixed_matrix must be n x p");
  }

  SrsrExperimentSummary summary;
  summary.config = config;
  summary.trials = config.trials;
  summary.trial_records.resize(config.trials);

  parallel_for_index(config.trials, [&](uint64_t i) {
    SrsrTrial& rec = summary.trial_records[i];
    const uint64_t trial_seed = derive_stream(config.seed, i);
    const uint64_t matrix_seed = derive_stream(trial_seed, 0);
    const uint64_t signal_seed = derive_stream(trial_seed, 1);
    const uint64_t noise_seed = derive_stream(trial_seed, 2);

    Eigen::MatrixXd m;
    if (config.fixed_matrix) {
      m = *config.fixed_matrix;
    } else {
      m = sample_matrix({config.kind, matrix_seed}, config.n, config.p) /
          std::sqrt(static_cast<double>(config.n));
    }

    Rng signal_rng(signal_seed);
    const auto support = signal_rng.sample_indices(
        static_cast<int>(config.p), static_cast<int>(config.s));
    Eigen::VectorXd x0 =
        Eigen::VectorXd::Zero(static_cast<Eigen::Index>(config.p));
    for (const int idx : support) x0(idx) = signal_rng.gaussian();

    Eigen::VectorXd e =
        Eigen::VectorXd::Zero(static_cast<Eigen::Index>(config.n));
    if (config.noise_level > 0.0) {
      Rng noise_rng(noise_seed);
      for (Eigen::Index j = 0; j < e.size(); ++j) {
        e(j) = config.noise_level * noise_rng.gaussian();
      }
      const double en = e.norm();
      if (en > config.eta) {
        e *= config.eta > 0.0 ? config.eta / en : 0.0;
        rec.noise_rescaled = true;
      }
    }

    RecoveryInstance inst;
    inst.matrix = m;
    inst.y = m * x0 + e;
    inst.eta = config.eta;
    inst.x0 = x0;
    inst.s = config.s;
    const RecoveryResult sol = l1_solve(inst, config.solver);
    const SrsrRatios ratios =
        srsr_errors(x0, sol.x_hat, config.s, config.eta);

    rec.exact_recovery = ratios.exact_recovery;
    rec.err_l1 = (x0 - sol.x_hat).lpNorm<1>();
    rec.err_l2 = (x0 - sol.x_hat).norm();
    rec.r1 = ratios.r1;
    rec.r2 = ratios.r2;
    rec.unbounded = ratios.unbounded;
    rec.objective = sol.objective;
    rec.feasibility_residual = sol.feasibility_residual;
    rec.optimality_gap = sol.optimality_gap;
    rec.iterations = sol.iterations;
    rec.status = sol.status;

    if (config.ric_precheck && !config.fixed_matrix) {
      const EmpiricalRic ric = empirical_ric({config.kind, matrix_seed},
                                             config.n, config.p,
                                             2 * config.s);
      rec.gamma = gamma_of(ric_pair(ric));
      rec.ric_pass = srsr_condition_holds(ric_pair(ric));
    }
  });

  for (const SrsrTrial& rec : summary.trial_records) {
    if (rec.exact_recovery) ++summary.exact_recoveries;
    if (rec.unbounded) {
      ++summary.unbounded_ratio_trials;
    } else {
      summary.max_r1 = std::max(summary.max_r1.value_or(rec.r1), rec.r1);
      summary.max_r2 = std::max(summary.max_r2.value_or(rec.r2), rec.r2);
    }
    if (rec.noise_rescaled) ++summary.rescaled_noise_trials;
    if (rec.ric_pass.has_value()) {
      ++summary.ric_checked_trials;
      if (*rec.ric_pass) {
        ++summary.ric_pass_trials;
        if (rec.exact_recovery) {
          ++summary.ric_pass_and_recovered;
        } else {
          summary.implication_holds = false;
        }
      }
    }
  }
  summary.success_rate = static_cast<double>(summary.exact_recoveries) /
                         static_cast<double>(summary.trials);
  return summary;
}

}  // namespace riclab
