#pragma once

#include <cmath>

namespace riclab {

/**
 * @brief Universal constants of the sparse-recovery condition.
 *
 * rho0 = (33 - 5*sqrt(41))/16 is the largest sparsity ratio for which the
 * recovery condition can hold, tau0 = 4/sqrt(41) the matching isometry
 * level, and gamma0 = (4+sqrt(41))^2/25 the critical spectral ratio.
 * They satisfy (1+tau0)/(1-tau0) = gamma0 exactly.
 */
struct UniversalConstants {
  double rho0;
  double tau0;
  double gamma0;
};

[[nodiscard]] inline const UniversalConstants& universal_constants() {
  static const UniversalConstants c = [] {
    const double s41 = std::sqrt(41.0);
    return UniversalConstants{(33.0 - 5.0 * s41) / 16.0, 4.0 / s41,
                              (4.0 + s41) * (4.0 + s41) / 25.0};
  }();
  return c;
}

/// Largest admissible sparsity ratio rho (strict upper bound for thresholds).
[[nodiscard]] inline double rho_zero() { return universal_constants().rho0; }

/// Critical isometry level: gamma(tau0, tau0) = gamma0.
[[nodiscard]] inline double tau_zero() { return universal_constants().tau0; }

/// Critical ratio (1+c_max)/(1-c_min) below which recovery is guaranteed.
[[nodiscard]] inline double gamma_zero() { return universal_constants().gamma0; }

}  // namespace riclab
