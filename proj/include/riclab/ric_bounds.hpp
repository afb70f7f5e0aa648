#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "riclab/constants.hpp"
#include "riclab/rate_functions.hpp"

namespace riclab {

/// Asymmetric restricted-isometry constants: (1-c_min)|x|^2 <= |Mx|^2 <= (1+c_max)|x|^2
/// over sparse x. c_min is meaningful in [0,1]; c_max is any nonnegative real.
struct RicPair {
  double c_min = 0.0;
  double c_max = 0.0;
};

namespace detail {

inline void check_ric(const RicPair& ric, const char* fn) {
  if (!(ric.c_min >= 0.0) || !(ric.c_max >= 0.0)) {
    throw std::domain_error(std::string(fn) +
                            ": RIC constants must be nonnegative");
  }
}

}  // namespace detail

/**
 * @brief gamma = (1 + c_max)/(1 - c_min), the condition ratio of the pair.
 *
 * Returns nullopt in the degenerate case c_min >= 1 (the lower isometry
 * bound carries no information and the ratio is infinite or undefined).
 */
[[nodiscard]] inline std::optional<double> gamma_of(const RicPair& ric) {
  detail::check_ric(ric, "gamma_of");
  if (ric.c_min >= 1.0) return std::nullopt;
  return (1.0 + ric.c_max) / (1.0 - ric.c_min);
}

/**
 * @brief The robust null-space constant kappa = 4b/(4-b) with
 * b = (c_min + c_max) / (2 sqrt((1-c_min)(1+c_max))).
 *
 * kappa < 1 is exactly equivalent to gamma < gamma0. Returns nullopt when
 * c_min >= 1 (b undefined) or b >= 4 (the kappa expression loses meaning).
 */
[[nodiscard]] inline std::optional<double> srsr_kappa(const RicPair& ric) {
  detail::check_ric(ric, "srsr_kappa");
  if (ric.c_min >= 1.0) return std::nullopt;
  const double b = (ric.c_min + ric.c_max) /
                   (2.0 * std::sqrt((1.0 - ric.c_min) * (1.0 + ric.c_max)));
  if (b >= 4.0) return std::nullopt;
  return 4.0 * b / (4.0 - b);
}

/// True iff gamma(ric) exists and is below the universal threshold gamma0.
[[nodiscard]] inline bool srsr_condition_holds(const RicPair& ric) {
  const auto g = gamma_of(ric);
  return g.has_value() && *g < gamma_zero();
}

/// Which spectral statistic the bound tracks: extreme eigenvalues of the
/// Gram matrix (eigen) or extreme singular values of the matrix (singular).
enum class Route { eigen, singular };

[[nodiscard]] inline const char* to_string(Route r) {
  return r == Route::eigen ? "eigen" : "singular";
}

/**
 * @brief Closed-form RIC bound at a proportional-growth point: with high
 * probability c_max <= psi_max and c_min <= psi_min (when psi_min < 1).
 */
struct RicBoundReport {
  double t0;
  double psi_min;
  double psi_max;
  Route route;
  RateModel model;
  GrowthPoint point;

  /// True when the point lies inside the range where the threshold
  /// statements are proved (rhobar < 2*rho0).
  [[nodiscard]] bool admissible() const { return point.within_theorem_budget(); }
};

/**
 * @brief Eigenvalue-route bound pair:
 * psi_min = sqrt(rhobar)(2 - sqrt(rhobar)) + t0,
 * psi_max = sqrt(rhobar)(2 + sqrt(rhobar)) + t0.
 *
 * psi_max - psi_min = 2*rhobar exactly. Returns nullopt when t_zero does.
 */
[[nodiscard]] inline std::optional<RicBoundReport> psi_bounds_eigen(
    const RateModel& model, const GrowthPoint& point) {
  const auto t0 = t_zero(model, point);
  if (!t0) return std::nullopt;
  const double sr = std::sqrt(point.rhobar);
  return RicBoundReport{*t0, sr * (2.0 - sr) + *t0, sr * (2.0 + sr) + *t0,
                        Route::eigen, model, point};
}

/**
 * @brief Singular-value-route bound pair with a = sqrt(rhobar) + t0:
 * psi_min = min{1, a(2 - a)} = 1 - max(0, 1 - a)^2 (capped at the trivial
 * bound 1 once a >= 1, where the lower-edge deviation event is vacuous),
 * psi_max = a(2 + a).
 */
[[nodiscard]] inline std::optional<RicBoundReport> psi_bounds_singular(
    const RateModel& model, const GrowthPoint& point) {
  const auto t0 = t_zero(model, point);
  if (!t0) return std::nullopt;
  const double a = std::sqrt(point.rhobar) + *t0;
  const double psi_min = a < 1.0 ? a * (2.0 - a) : 1.0;
  return RicBoundReport{*t0, psi_min, a * (2.0 + a), Route::singular, model,
                        point};
}

namespace detail {

inline void check_rho_window(double rho, const char* fn) {
  if (!(rho > 0.0 && rho < rho_zero())) {
    throw std::domain_error(std::string(fn) + ": rho must lie in (0, rho0)");
  }
}

}  // namespace detail

/**
 * @brief The deviation level evaluated inside the eigen-route delta
 * threshold: t_*(rho) = (8/sqrt(41)) rho - 2 sqrt(2) sqrt(rho) + 4/sqrt(41),
 * equal to 2 tau0 (sqrt(rho)-sqrt(rho0))(sqrt(rho)-1/(2 sqrt(rho0))).
 */
[[nodiscard]] inline double t_star(double rho) {
  detail::check_rho_window(rho, "t_star");
  const double s41 = std::sqrt(41.0);
  return (8.0 / s41) * rho - 2.0 * std::sqrt(2.0) * std::sqrt(rho) + 4.0 / s41;
}

/// ln of psi0_eigen; the threshold itself underflows double for small rho.
[[nodiscard]] inline double psi0_eigen_log(double rho, const RateModel& model) {
  detail::check_rho_window(rho, "psi0_eigen");
  const double inv2rho = 1.0 / (2.0 * rho);
  return std::log(inv2rho) + 1.0 - inv2rho * rate(model, 2.0 * rho, t_star(rho));
}

/**
 * @brief Eigen-route delta threshold
 * Psi0^(1)(rho, W) = (1/2rho) exp{1 - (1/2rho) W[2rho, t_*(rho)]};
 * SRSR holds with overwhelming probability when delta exceeds it.
 */
[[nodiscard]] inline double psi0_eigen(double rho, const RateModel& model) {
  return std::exp(psi0_eigen_log(rho, model));
}

/// ln of psi0_singular.
[[nodiscard]] inline double psi0_singular_log(double rho,
                                              const RateModel& model) {
  detail::check_rho_window(rho, "psi0_singular");
  const double inv2rho = 1.0 / (2.0 * rho);
  const double t = std::sqrt(2.0 * rho_zero()) - std::sqrt(2.0 * rho);
  return std::log(inv2rho) + 1.0 - inv2rho * rate(model, 2.0 * rho, t);
}

/**
 * @brief Singular-route delta threshold
 * Psi0^(2)(rho, W) = (1/2rho) exp{1 - (1/2rho) W[2rho, sqrt(2rho0)-sqrt(2rho)]}.
 */
[[nodiscard]] inline double psi0_singular(double rho, const RateModel& model) {
  return std::exp(psi0_singular_log(rho, model));
}

/// Route-dispatched delta threshold (log scale).
[[nodiscard]] inline double psi0_log(Route route, double rho,
                                     const RateModel& model) {
  return route == Route::eigen ? psi0_eigen_log(rho, model)
                               : psi0_singular_log(rho, model);
}

/// Route-dispatched delta threshold.
[[nodiscard]] inline double psi0(Route route, double rho,
                                 const RateModel& model) {
  return std::exp(psi0_log(route, rho, model));
}

/// ln of gaussian_srsr_curve.
[[nodiscard]] inline double gaussian_srsr_curve_log(double rho) {
  detail::check_rho_window(rho, "gaussian_srsr_curve");
  const double d = std::sqrt(2.0 * rho_zero()) - std::sqrt(2.0 * rho);
  return -std::log(2.0 * rho) + 1.0 - d * d / (4.0 * rho);
}

/**
 * @brief The explicit Gaussian phase curve
 * (1/2rho) exp[1 - (1/4rho)(sqrt(2rho0) - sqrt(2rho))^2]; coincides with
 * psi0_singular(rho, ds) identically.
 */
[[nodiscard]] inline double gaussian_srsr_curve(double rho) {
  return std::exp(gaussian_srsr_curve_log(rho));
}

/// ln of small_rho_conditions.
[[nodiscard]] inline double small_rho_conditions_log(double rho,
                                                     const RateModel& model) {
  detail::check_rho_window(rho, "small_rho_conditions");
  const double lead = -std::log(2.0 * rho);
  switch (model.kind) {
    case RateKind::ds:
      return lead - rho_zero() / (2.0 * rho);
    case RateKind::lr:
      detail::check_positive(model.c_lr, "small_rho_conditions", "c_lr");
      return lead - tau_zero() / (model.c_lr * std::sqrt(2.0 * rho));
    case RateKind::fs:
      detail::check_positive(model.c_fs, "small_rho_conditions", "c_fs");
      return lead - std::pow(std::abs(std::log(rho)), 1.5) /
                        (std::pow(2.0, 1.5) * model.c_fs);
    case RateKind::tw:
      break;
  }
  throw std::invalid_argument(
      "small_rho_conditions: no small-rho row for the tw model");
}

/**
 * @brief Leading small-rho approximation of the delta threshold for the
 * selected model (ds, lr, fs); the tw model has no such row.
 */
[[nodiscard]] inline double small_rho_conditions(double rho,
                                                 const RateModel& model) {
  return std::exp(small_rho_conditions_log(rho, model));
}

/**
 * @brief Leading-order psi_max along the delta fixed, rhobar -> 0 regime:
 * ds: 2 sqrt(2) sqrt(rhobar |ln rhobar|) + 2 sqrt(rhobar)
 *     + sqrt(2) (1 - ln delta) sqrt(rhobar/|ln rhobar|);
 * lr: c_lr sqrt(rhobar) |ln rhobar| + (2 + c_lr (1 - ln delta)) sqrt(rhobar);
 * fs: 2 sqrt(rhobar) exp[c_fs^{2/3} |ln rhobar|^{2/3}].
 */
[[nodiscard]] inline double regime_a_psi_max(double rhobar, double delta,
                                             const RateModel& model) {
  detail::check_rhobar(rhobar, "regime_a_psi_max");
  if (!(delta > 0.0 && delta < 1.0)) {
    throw std::domain_error("regime_a_psi_max: delta must lie in (0,1)");
  }
  const double sr = std::sqrt(rhobar);
  const double al = std::abs(std::log(rhobar));
  switch (model.kind) {
    case RateKind::ds:
      return 2.0 * std::sqrt(2.0) * std::sqrt(rhobar * al) + 2.0 * sr +
             std::sqrt(2.0) * (1.0 - std::log(delta)) * std::sqrt(rhobar / al);
    case RateKind::lr:
      detail::check_positive(model.c_lr, "regime_a_psi_max", "c_lr");
      return model.c_lr * sr * al +
             (2.0 + model.c_lr * (1.0 - std::log(delta))) * sr;
    case RateKind::fs:
      detail::check_positive(model.c_fs, "regime_a_psi_max", "c_fs");
      return 2.0 * sr *
             std::exp(std::pow(model.c_fs, 2.0 / 3.0) * std::pow(al, 2.0 / 3.0));
    case RateKind::tw:
      break;
  }
  throw std::invalid_argument(
      "regime_a_psi_max: no asymptotic row for the tw model");
}

/**
 * @brief Probability-exponent gap D2 = [W(rhobar, t0+eps) - W(rhobar, t0)]/2
 * controlling how fast the failure probability decays beyond level t0.
 */
[[nodiscard]] inline std::optional<double> d2_exponent(const RateModel& model,
                                                       double rhobar,
                                                       double delta,
                                                       double eps) {
  if (!(eps > 0.0)) {
    throw std::domain_error("d2_exponent: eps must be positive");
  }
  const GrowthPoint point(delta, rhobar);
  const auto t0 = t_zero(model, point);
  if (!t0) return std::nullopt;
  return 0.5 * (rate(model, rhobar, *t0 + eps) - rate(model, rhobar, *t0));
}

}  // namespace riclab
