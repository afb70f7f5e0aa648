#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

/**
 * Independent reference computations ("oracles") used to validate the main
 * library. Nothing here shares code with include/riclab: binomials are exact
 * big integers, transcendental values are evaluated at 50+ decimal digits,
 * eigenvalues come from closed-form characteristic polynomials, and the l1
 * optimum from exhaustive vertex enumeration.
 */
namespace riclab::selftest {

/// Exact C(n, k) as a decimal string (arbitrary precision).
[[nodiscard]] std::string binomial_decimal_oracle(uint64_t n, uint64_t k);

/// ln C(n, k) from the exact integer value via a 100-digit logarithm.
[[nodiscard]] double log_binomial_oracle(uint64_t n, uint64_t k);

/// 50-digit evaluation of the natural-log Shannon entropy.
[[nodiscard]] double entropy_oracle(double t);

/// 50-digit evaluation of ln of the Gaussian phase curve
/// (1/2rho) exp[1 - (1/4rho)(sqrt(2rho0) - sqrt(2rho))^2].
[[nodiscard]] double curve_log_oracle(double rho);

/// ln[(n / 2^{2m}) C(2m, m-n)] with exact binomials.
[[nodiscard]] double borned1_even_lhs_oracle(uint64_t m, uint64_t n);

/// ln[((n + 1/2) / 2^{2m}) C(2m+1, m-n)] with exact binomials.
[[nodiscard]] double borned1_odd_lhs_oracle(uint64_t m, uint64_t n);

/// Exhaustive verification of both central-binomial log bounds
/// (even rhs 5 - 0.6321 n^2/m, odd rhs 2 - 0.6555 n^2/m) over
/// 1 <= n <= m <= limit, with the minimal observed margins.
struct BorneD1Sweep {
  bool all_hold = false;
  uint64_t pairs_checked = 0;
  double min_margin_even = 0.0;
  double min_margin_odd = 0.0;
  uint64_t argmin_even_m = 0, argmin_even_n = 0;
  uint64_t argmin_odd_m = 0, argmin_odd_n = 0;
};
[[nodiscard]] BorneD1Sweep borned1_sweep_oracle(uint64_t limit);

/// Ascending eigenvalues of a symmetric matrix of dimension <= 4, computed
/// from the characteristic polynomial (Faddeev-LeVerrier coefficients,
/// closed-form quadratic/cubic/quartic roots, Newton polish).
[[nodiscard]] std::vector<double> charpoly_eigs_oracle(
    const Eigen::MatrixXd& a);

/// Exact optimum of min |x|_1 s.t. Mx = y for full-row-rank M (rows <= cols
/// <= 24) by enumerating every basic (vertex) solution: all invertible
/// column subsets B of size rows, candidate x_B = B^{-1} y.
[[nodiscard]] double l1_vertex_optimum_oracle(const Eigen::MatrixXd& m,
                                              const Eigen::VectorXd& y);

/// Best s-term l1 approximation error by exhaustive support enumeration
/// (dim <= 20).
[[nodiscard]] double sigma_s_bruteforce_oracle(const Eigen::VectorXd& x,
                                               uint64_t s);

}  // namespace riclab::selftest
