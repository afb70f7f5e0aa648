#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace riclab {

/**
 * @brief Shannon entropy H(t) = -t ln t - (1-t) ln(1-t), in nats.
 *
 * Natural logarithm throughout: H feeds exponents of the form exp(-n W),
 * so nats are the only consistent unit.
 */
[[nodiscard]] inline double shannon_entropy(double t) {
  if (!(t > 0.0 && t < 1.0)) {
    throw std::domain_error("shannon_entropy: t must lie in (0,1), got " +
                            std::to_string(t));
  }
  return -t * std::log(t) - (1.0 - t) * std::log1p(-t);
}

/**
 * @brief ln C(p, r) via log-gamma.
 *
 * Accurate to ~1e-9 relative for p up to 1e6. Returns exactly 0 for the
 * r = 0 and r = p boundaries.
 */
[[nodiscard]] inline double log_binomial(std::uint64_t p, std::uint64_t r) {
  if (r > p) {
    throw std::domain_error("log_binomial: r > p");
  }
  if (r == 0 || r == p) return 0.0;
  const double pd = static_cast<double>(p);
  const double rd = static_cast<double>(r);
  return std::lgamma(pd + 1.0) - std::lgamma(rd + 1.0) -
         std::lgamma(pd - rd + 1.0);
}

/**
 * @brief The entropy-envelope prefactor Theta(p, r).
 *
 * Theta^2 = e^(1/2) / (2*pi*[r(1-r/p)]^(1/p)); the envelope inequality
 * C(p,r) <= Theta * e^(p*H(r/p)) holds for all 1 <= r < p.
 */
[[nodiscard]] inline double binomial_envelope_theta(std::uint64_t p,
                                                    std::uint64_t r) {
  if (r == 0 || r >= p) {
    throw std::domain_error("binomial_envelope_theta: requires 1 <= r < p");
  }
  const double pd = static_cast<double>(p);
  const double rd = static_cast<double>(r);
  const double x = rd * (1.0 - rd / pd);
  return std::sqrt(std::exp(0.5) /
                   (2.0 * std::numbers::pi * std::pow(x, 1.0 / pd)));
}

/**
 * @brief Stirling remainder theta(z) = 12 z ln[Gamma(z+1)/(sqrt(2 pi z)(z/e)^z)].
 *
 * Contract: theta(z) lies in (0,1) for z > 0.
 *
 * The direct form is catastrophically cancellative for large z (the log
 * ratio is ~1/(12z) while each term is ~z ln z), so for z >= 8 the even
 * Bernoulli series 12z * sum_k B_{2k} / (2k(2k-1) z^{2k-1}) is used; its
 * truncation error is below the first omitted term, ~1e-13 at the switch.
 */
[[nodiscard]] inline double stirling_theta(double z) {
  if (!(z > 0.0)) {
    throw std::domain_error("stirling_theta: z must be positive");
  }
  if (z < 8.0) {
    const double log_ratio = std::lgamma(z + 1.0) -
                             0.5 * std::log(2.0 * std::numbers::pi * z) -
                             z * (std::log(z) - 1.0);
    return 12.0 * z * log_ratio;
  }
  const double w = 1.0 / (z * z);
  // 12 * B_{2k} / (2k(2k-1)) for k = 1..7.
  double series = 1.0 / 13.0;
  series = series * w - 691.0 / 30030.0;
  series = series * w + 1.0 / 99.0;
  series = series * w - 1.0 / 140.0;
  series = series * w + 1.0 / 105.0;
  series = series * w - 1.0 / 30.0;
  return series * w + 1.0;
}

struct BoundPair {
  double lhs;
  double rhs;
};

/// lhs/rhs pairs of the two binomial log bounds checked by the brute-force
/// sweep: even = ln[(n/2^{2m}) C(2m, m-n)] vs 5 - 0.6321 n^2/m and
/// odd = ln[((n+1/2)/2^{2m}) C(2m+1, m-n)] vs 2 - 0.6555 n^2/m.
struct BinomialLogBounds {
  BoundPair even;
  BoundPair odd;
};

[[nodiscard]] inline BinomialLogBounds binomial_log_bound_check(
    std::uint64_t m, std::uint64_t n) {
  if (n == 0 || n > m) {
    throw std::domain_error("binomial_log_bound_check: requires 1 <= n <= m");
  }
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  const double two_m_log2 = 2.0 * md * std::numbers::ln2;
  BinomialLogBounds out;
  out.even.lhs = std::log(nd) - two_m_log2 + log_binomial(2 * m, m - n);
  out.even.rhs = 5.0 - 0.6321 * nd * nd / md;
  out.odd.lhs = std::log(nd + 0.5) - two_m_log2 + log_binomial(2 * m + 1, m - n);
  out.odd.rhs = 2.0 - 0.6555 * nd * nd / md;
  return out;
}

}  // namespace riclab
