#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "riclab/rate_functions.hpp"

namespace riclab {

/**
 * @brief The explicit constants of the Rademacher deviation machinery:
 * diagram counts (c0_d, c_d), path counts (c0_sigma, c_sigma), trace sums
 * (c0_rad, c_rad), the resulting rate constant c_fs and the moderate-range
 * threshold v_rad.
 */
struct FsConstants {
  double c0_d = 8.31;
  double c_d = 53.8;
  double c0_sigma = 160.4;
  double c_sigma = 13.3;
  double c0_rad = 95278.0;
  double c_rad = 830415.0;
  double c_fs = 837.0;
  double v_rad = 3242.0;
};

/// A positive quantity carried in log scale so that astronomically large
/// bounds stay representable; value() may overflow to +inf by design.
struct LogScaled {
  double log_value;

  [[nodiscard]] double value() const { return std::exp(log_value); }
};

namespace detail {

inline void check_count_ge(uint64_t v, uint64_t lo, const char* fn,
                           const char* name) {
  if (v < lo) {
    throw std::domain_error(std::string(fn) + ": " + name + " must be >= " +
                            std::to_string(lo));
  }
}

}  // namespace detail

/// ln of d1_bound.
[[nodiscard]] inline double d1_bound_log(uint64_t s,
                                         const FsConstants& k = {}) {
  detail::check_count_ge(s, 1, "d1_bound", "s");
  const double sd = static_cast<double>(s);
  return std::log(k.c0_d) + (sd - 1.0) * std::log(k.c_d) +
         (sd - 0.5) * std::log(sd);
}

/**
 * @brief Diagram-count bound c0_d * c_d^{s-1} * s^{s-1/2}; evaluated
 * directly for small s and in log space beyond s = 20.
 */
[[nodiscard]] inline double d1_bound(uint64_t s, const FsConstants& k = {}) {
  detail::check_count_ge(s, 1, "d1_bound", "s");
  if (s <= 20) {
    const double sd = static_cast<double>(s);
    return k.c0_d * std::pow(k.c_d, sd - 1.0) * std::pow(sd, sd - 0.5);
  }
  return std::exp(d1_bound_log(s, k));
}

/**
 * @brief ln of the closed-path count bound
 * c0_sigma * n * (M N)^{n/2} * exp[c_sigma (1 + sqrt(M/N)) n^{3/2} / sqrt(M)].
 */
[[nodiscard]] inline double path_bound(uint64_t n, uint64_t m_rows,
                                       uint64_t n_cols,
                                       const FsConstants& k = {}) {
  detail::check_count_ge(n, 1, "path_bound", "n");
  detail::check_count_ge(m_rows, 1, "path_bound", "m_rows");
  if (m_rows > n_cols) {
    throw std::domain_error("path_bound: m_rows must not exceed n_cols");
  }
  const double nd = static_cast<double>(n);
  const double m = static_cast<double>(m_rows);
  const double nn = static_cast<double>(n_cols);
  return std::log(k.c0_sigma) + std::log(nd) +
         0.5 * nd * (std::log(m) + std::log(nn)) +
         k.c_sigma * (1.0 + std::sqrt(m / nn)) * std::pow(nd, 1.5) /
             std::sqrt(m);
}

/**
 * @brief ln of the trace-sum bound
 * Delta_m = c0_rad/(1 - M/N) * m * [(MN/((M-1)(N-1)))^m + M/m]
 *           * exp[c_rad (1 + sqrt(M/N))^4 m^3 / M^2].
 */
[[nodiscard]] inline double trace_bound_delta(uint64_t m, uint64_t m_rows,
                                              uint64_t n_cols,
                                              const FsConstants& k = {}) {
  detail::check_count_ge(m, 1, "trace_bound_delta", "m");
  detail::check_count_ge(m_rows, 54, "trace_bound_delta", "m_rows");
  if (m_rows >= n_cols) {
    throw std::domain_error(
        "trace_bound_delta: m_rows must be strictly less than n_cols");
  }
  const double md = static_cast<double>(m);
  const double mm = static_cast<double>(m_rows);
  const double nn = static_cast<double>(n_cols);
  const double rho = mm / nn;
  // log-sum-exp of the two bracket terms (MN/((M-1)(N-1)))^m and M/m.
  const double a = md * (std::log(mm) + std::log(nn) - std::log(mm - 1.0) -
                         std::log(nn - 1.0));
  const double b = std::log(mm) - std::log(md);
  const double hi = std::max(a, b);
  const double lse = hi + std::log1p(std::exp(std::min(a, b) - hi));
  const double root = 1.0 + std::sqrt(rho);
  return std::log(k.c0_rad) - std::log1p(-rho) + std::log(md) + lse +
         k.c_rad * root * root * root * root * md * md * md / (mm * mm);
}

/**
 * @brief Rademacher largest-singular-value tail bound
 * (W0(rho, eps)/(1 - rho)) * M * exp(-N * W_fs(rho, eps)), rho = M/N,
 * with prefactor W0 = c0 exp[c0 sqrt(ln(1 + eps/(2 sqrt(rho))))].
 *
 * c0 is not pinned by any stated value; callers pass their own (default 1)
 * and should treat bounds >= 1 as vacuous.
 */
[[nodiscard]] inline LogScaled fs_tail_bound(uint64_t m_rows, uint64_t n_cols,
                                             double eps, double c0 = 1.0,
                                             const FsConstants& k = {}) {
  detail::check_count_ge(m_rows, 54, "fs_tail_bound", "m_rows");
  if (m_rows >= n_cols) {
    throw std::domain_error(
        "fs_tail_bound: m_rows must be strictly less than n_cols");
  }
  if (!(eps > 0.0)) {
    throw std::domain_error("fs_tail_bound: eps must be positive");
  }
  if (!(c0 > 0.0)) {
    throw std::domain_error("fs_tail_bound: c0 must be positive");
  }
  const double mm = static_cast<double>(m_rows);
  const double nn = static_cast<double>(n_cols);
  const double rho = mm / nn;
  const double lg = std::log1p(eps / (2.0 * std::sqrt(rho)));
  const double log_w0 = std::log(c0) + c0 * std::sqrt(lg);
  return LogScaled{log_w0 - std::log1p(-rho) + std::log(mm) -
                   nn * rate_fs(rho, eps, k.c_fs)};
}

/**
 * @brief Exponent of the moderate-deviation Rademacher bound,
 * -N rho^{1/4} eps^{3/2} / ((1 + sqrt(rho))^2 c_big), valid for any
 * c_big strictly above v_rad and eps strictly below sqrt(rho).
 *
 * The matching prefactor is existential and not computable, so only the
 * exponent is returned.
 */
[[nodiscard]] inline double fs_moderate_bound(uint64_t m_rows, uint64_t n_cols,
                                              double eps, double c_big,
                                              const FsConstants& k = {}) {
  detail::check_count_ge(m_rows, 54, "fs_moderate_bound", "m_rows");
  if (m_rows >= n_cols) {
    throw std::domain_error(
        "fs_moderate_bound: m_rows must be strictly less than n_cols");
  }
  const double mm = static_cast<double>(m_rows);
  const double nn = static_cast<double>(n_cols);
  const double rho = mm / nn;
  if (!(eps > 0.0 && eps < std::sqrt(rho))) {
    throw std::domain_error(
        "fs_moderate_bound: eps must lie strictly inside (0, sqrt(M/N))");
  }
  if (!(c_big > k.v_rad)) {
    throw std::domain_error(
        "fs_moderate_bound: c_big must exceed v_rad (strictly)");
  }
  const double root = 1.0 + std::sqrt(rho);
  return -nn * std::pow(rho, 0.25) * std::pow(eps, 1.5) /
         (root * root * c_big);
}

/// One internal-consistency relation between stored constants.
struct ConstantRelation {
  std::string name;
  double stated;      ///< the value carried in FsConstants
  double computed;    ///< the value implied by the relation
  double rel_error;   ///< |computed - stated| / |stated|
  bool within_tol;    ///< rel_error <= 1e-3
  bool expect_match;  ///< false for the known-discrepancy probe

  /// A relation is healthy when agreement matches expectation.
  [[nodiscard]] bool ok() const { return within_tol == expect_match; }
};

struct ConstantChainReport {
  std::array<ConstantRelation, 5> relations;
  bool all_ok;
};

/**
 * @brief Recomputes every derivable constant from its upstream constants and
 * checks agreement at 0.1% relative. The fifth probe is the known
 * discrepancy: the alternative multiplier 355.7 does not reproduce c_rad
 * (286.9 does), and the check passes only when that mismatch is detected.
 */
[[nodiscard]] inline ConstantChainReport verify_constant_chain(
    const FsConstants& k) {
  constexpr double tol = 1e-3;
  auto make = [&](std::string name, double stated, double computed,
                  bool expect_match) {
    const double rel = std::abs(computed - stated) / std::abs(stated);
    return ConstantRelation{std::move(name), stated, computed, rel, rel <= tol,
                            expect_match};
  };
  const double ln15 = std::log(1.5);
  ConstantChainReport report{
      {make("c0_rad = 594 * c0_sigma", k.c0_rad, 594.0 * k.c0_sigma, true),
       make("c_rad = 286.9 * c_d^2", k.c_rad, 286.9 * k.c_d * k.c_d, true),
       make("c_fs = 3*sqrt(3)/(4*sqrt(2)) * sqrt(c_rad)", k.c_fs,
            3.0 * std::sqrt(3.0) / (4.0 * std::sqrt(2.0)) * std::sqrt(k.c_rad),
            true),
       make("v_rad = 3*sqrt(3*c_rad)/(4*sqrt(2)*ln(1.5)^{3/2})", k.v_rad,
            3.0 * std::sqrt(3.0 * k.c_rad) /
                (4.0 * std::sqrt(2.0) * std::pow(ln15, 1.5)),
            true),
       make("known discrepancy: 355.7 * c_d^2 != c_rad", k.c_rad,
            355.7 * k.c_d * k.c_d, false)},
      true};
  for (const auto& r : report.relations) {
    report.all_ok = report.all_ok && r.ok();
  }
  return report;
}

[[nodiscard]] inline ConstantChainReport verify_constant_chain() {
  return verify_constant_chain(FsConstants{});
}

}  // namespace riclab
