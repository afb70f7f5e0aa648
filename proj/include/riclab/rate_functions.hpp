#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

#include "riclab/constants.hpp"
#include "riclab/scalar.hpp"

namespace riclab {

/// The four deviation rate-function families. tw: the ideal Tracy-Widom-scale
/// hypothesis; ds: the Gaussian singular-value bound (t^2/2); lr: the
/// covariance small-deviation bound; fs: the Rademacher bound.
enum class RateKind { tw, ds, lr, fs };

[[nodiscard]] inline const char* to_string(RateKind k) {
  switch (k) {
    case RateKind::tw: return "tw";
    case RateKind::ds: return "ds";
    case RateKind::lr: return "lr";
    case RateKind::fs: return "fs";
  }
  return "?";
}

/**
 * @brief A rate function selected by kind, with its tunable constants.
 *
 * c_lr has no guaranteed numeric value; the default 1 is a placeholder and
 * callers should surface a warning when relying on it. c_fs defaults to the
 * proven upper bound 837.
 */
struct RateModel {
  RateKind kind = RateKind::ds;
  double c_tw = 1.0;
  double c_lr = 1.0;
  double c_fs = 837.0;

  [[nodiscard]] static RateModel tw(double c = 1.0) {
    return {RateKind::tw, c, 1.0, 837.0};
  }
  [[nodiscard]] static RateModel ds() { return {RateKind::ds, 1.0, 1.0, 837.0}; }
  [[nodiscard]] static RateModel lr(double c = 1.0) {
    return {RateKind::lr, 1.0, c, 837.0};
  }
  [[nodiscard]] static RateModel fs(double c = 837.0) {
    return {RateKind::fs, 1.0, 1.0, c};
  }
};

/**
 * @brief Proportional-growth coordinates: delta = n/p, rho = s/n, rhobar = r/n.
 *
 * rhobar = 2*rho always. The constructor enforces delta, rhobar in (0,1);
 * the tighter theorem budget rhobar < 2*rho0 is a soft flag so that callers
 * can still evaluate the formulas outside it (marked inadmissible).
 */
struct GrowthPoint {
  double delta;
  double rho;
  double rhobar;

  GrowthPoint(double delta_, double rhobar_)
      : delta(delta_), rho(rhobar_ / 2.0), rhobar(rhobar_) {
    if (!(delta > 0.0 && delta < 1.0)) {
      throw std::domain_error("GrowthPoint: delta must lie in (0,1), got " +
                              std::to_string(delta_));
    }
    if (!(rhobar > 0.0 && rhobar < 1.0)) {
      throw std::domain_error("GrowthPoint: rhobar must lie in (0,1), got " +
                              std::to_string(rhobar_));
    }
  }

  /// True when rhobar < 2*rho0, the range on which the threshold theorems apply.
  [[nodiscard]] bool within_theorem_budget() const {
    return rhobar < 2.0 * rho_zero();
  }
};

namespace detail {

inline void check_t(double t, const char* fn) {
  if (!(t >= 0.0)) {
    throw std::domain_error(std::string(fn) + ": t must be nonnegative");
  }
}

inline void check_u(double u, const char* fn) {
  if (!(u >= 0.0)) {
    throw std::domain_error(std::string(fn) + ": u must be nonnegative");
  }
}

inline void check_rhobar(double rhobar, const char* fn) {
  if (!(rhobar > 0.0 && rhobar < 1.0)) {
    throw std::domain_error(std::string(fn) + ": rhobar must lie in (0,1)");
  }
}

inline void check_positive(double c, const char* fn, const char* name) {
  if (!(c > 0.0)) {
    throw std::domain_error(std::string(fn) + ": " + name +
                            " must be positive");
  }
}

}  // namespace detail

/// W_ds(rhobar, t) = t^2/2, independent of rhobar.
[[nodiscard]] inline double rate_ds([[maybe_unused]] double rhobar, double t) {
  detail::check_t(t, "rate_ds");
  return 0.5 * t * t;
}

/// Inverse of rate_ds in t: sqrt(2u).
[[nodiscard]] inline double rate_ds_inv([[maybe_unused]] double rhobar,
                                        double u) {
  detail::check_u(u, "rate_ds_inv");
  return std::sqrt(2.0 * u);
}

/**
 * @brief Three-branch ideal rate: t^{3/2} branch up to sqrt(rhobar), then t^2
 * up to 1, then linear, all divided by c_tw (1+sqrt(rhobar))^2.
 */
[[nodiscard]] inline double rate_tw(double rhobar, double t, double c_tw) {
  detail::check_rhobar(rhobar, "rate_tw");
  detail::check_t(t, "rate_tw");
  detail::check_positive(c_tw, "rate_tw", "c_tw");
  const double sr = std::sqrt(rhobar);
  const double denom = c_tw * (1.0 + sr) * (1.0 + sr);
  if (t <= sr) return std::pow(rhobar, 0.25) * std::pow(t, 1.5) / denom;
  if (t <= 1.0) return t * t / denom;
  return t / denom;
}

[[nodiscard]] inline double rate_tw_inv(double rhobar, double u, double c_tw) {
  detail::check_rhobar(rhobar, "rate_tw_inv");
  detail::check_u(u, "rate_tw_inv");
  detail::check_positive(c_tw, "rate_tw_inv", "c_tw");
  const double sr = std::sqrt(rhobar);
  const double denom = c_tw * (1.0 + sr) * (1.0 + sr);
  const double u1 = rhobar / denom;  // = rate_tw at t = sqrt(rhobar)
  const double u2 = 1.0 / denom;     // = rate_tw at t = 1
  if (u <= u1) return std::pow(u * denom / std::pow(rhobar, 0.25), 2.0 / 3.0);
  if (u <= u2) return std::sqrt(u * denom);
  return u * denom;
}

namespace detail {

// Shared two-branch form of the covariance small-deviation rate; sign = +1
// for the largest-eigenvalue version, -1 for the smallest.
[[nodiscard]] inline double rate_lr_impl(double rhobar, double t, double c_lr,
                                         double sign, const char* fn) {
  check_rhobar(rhobar, fn);
  check_t(t, fn);
  check_positive(c_lr, fn, "c_lr");
  const double sr = std::sqrt(rhobar);
  const double edge = 1.0 + sign * sr;  // (1 +- sqrt(rhobar))
  const double breakpoint = sr * edge * edge;
  if (t <= breakpoint) {
    return std::pow(rhobar, 0.25) * std::pow(t, 1.5) /
           (c_lr * edge * edge * edge);
  }
  return sr * t / (c_lr * edge * edge);
}

}  // namespace detail

/// Largest-eigenvalue branch; this is the variant used for inverses and t0.
[[nodiscard]] inline double rate_lr(double rhobar, double t, double c_lr) {
  return detail::rate_lr_impl(rhobar, t, c_lr, +1.0, "rate_lr");
}

/// Smallest-eigenvalue branch; dominates rate_lr pointwise.
[[nodiscard]] inline double rate_lr_min(double rhobar, double t, double c_lr) {
  return detail::rate_lr_impl(rhobar, t, c_lr, -1.0, "rate_lr_min");
}

[[nodiscard]] inline double rate_lr_inv(double rhobar, double u, double c_lr) {
  detail::check_rhobar(rhobar, "rate_lr_inv");
  detail::check_u(u, "rate_lr_inv");
  detail::check_positive(c_lr, "rate_lr_inv", "c_lr");
  const double sr = std::sqrt(rhobar);
  const double e2 = (1.0 + sr) * (1.0 + sr);
  if (u <= rhobar / c_lr) {
    return std::pow(c_lr, 2.0 / 3.0) * e2 / std::pow(rhobar, 1.0 / 6.0) *
           std::pow(u, 2.0 / 3.0);
  }
  return c_lr * e2 / sr * u;
}

/// W_fs(rhobar, t) = rhobar [ln(1 + t/(2 sqrt(rhobar)))]^{3/2} / (c_fs (1+sqrt(rhobar))^2).
[[nodiscard]] inline double rate_fs(double rhobar, double t, double c_fs) {
  detail::check_rhobar(rhobar, "rate_fs");
  detail::check_t(t, "rate_fs");
  detail::check_positive(c_fs, "rate_fs", "c_fs");
  const double sr = std::sqrt(rhobar);
  const double lg = std::log1p(t / (2.0 * sr));
  return rhobar * std::pow(lg, 1.5) / (c_fs * (1.0 + sr) * (1.0 + sr));
}

[[nodiscard]] inline double rate_fs_inv(double rhobar, double u, double c_fs) {
  detail::check_rhobar(rhobar, "rate_fs_inv");
  detail::check_u(u, "rate_fs_inv");
  detail::check_positive(c_fs, "rate_fs_inv", "c_fs");
  const double sr = std::sqrt(rhobar);
  const double expo = std::pow(c_fs, 2.0 / 3.0) *
                      std::pow(1.0 + sr, 4.0 / 3.0) /
                      std::pow(rhobar, 2.0 / 3.0) * std::pow(u, 2.0 / 3.0);
  return 2.0 * sr * std::expm1(expo);
}

/// W(rhobar, t) for the model's kind and constants.
[[nodiscard]] inline double rate(const RateModel& model, double rhobar,
                                 double t) {
  switch (model.kind) {
    case RateKind::tw: return rate_tw(rhobar, t, model.c_tw);
    case RateKind::ds: return rate_ds(rhobar, t);
    case RateKind::lr: return rate_lr(rhobar, t, model.c_lr);
    case RateKind::fs: return rate_fs(rhobar, t, model.c_fs);
  }
  throw std::logic_error("rate: unknown kind");
}

/// W^{-1}(rhobar, u) for the model's kind and constants.
[[nodiscard]] inline double rate_inv(const RateModel& model, double rhobar,
                                     double u) {
  switch (model.kind) {
    case RateKind::tw: return rate_tw_inv(rhobar, u, model.c_tw);
    case RateKind::ds: return rate_ds_inv(rhobar, u);
    case RateKind::lr: return rate_lr_inv(rhobar, u, model.c_lr);
    case RateKind::fs: return rate_fs_inv(rhobar, u, model.c_fs);
  }
  throw std::logic_error("rate_inv: unknown kind");
}

/// Supremum of W(rhobar, .) over t >= 0. All four families are unbounded,
/// so this returns +infinity; t_zero still checks against it so that a
/// bounded-range model could be added without changing callers.
[[nodiscard]] inline double rate_range_sup([[maybe_unused]] const RateModel& model,
                                           [[maybe_unused]] double rhobar) {
  return std::numeric_limits<double>::infinity();
}

/**
 * @brief Uniform deviation level t0 = W^{-1}(rhobar, H(rhobar*delta)/delta).
 *
 * This is the level at which the per-support deviation bound absorbs the
 * union bound over all supports. Returns nullopt when H(rhobar*delta)/delta
 * falls outside the range of W(rhobar, .); throws on invalid coordinates.
 */
[[nodiscard]] inline std::optional<double> t_zero(const RateModel& model,
                                                  const GrowthPoint& point) {
  const double x = point.rhobar * point.delta;
  if (!(x > 0.0 && x < 1.0)) {
    throw std::domain_error("t_zero: rhobar*delta must lie in (0,1)");
  }
  const double u = shannon_entropy(x) / point.delta;
  if (u > rate_range_sup(model, point.rhobar)) {
    return std::nullopt;
  }
  return rate_inv(model, point.rhobar, u);
}

}  // namespace riclab
