#include "oracles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace riclab::selftest {

namespace {

using big_int = boost::multiprecision::cpp_int;
using big_float = boost::multiprecision::cpp_bin_float_100;
using float50 = boost::multiprecision::cpp_bin_float_50;

[[nodiscard]] big_int exact_binomial(uint64_t n, uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  big_int c = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    c *= n - k + i;
    c /= i;
  }
  return c;
}

[[nodiscard]] double log_of(const big_int& v) {
  return static_cast<double>(log(big_float(v)));
}

}  // namespace

std::string binomial_decimal_oracle(uint64_t n, uint64_t k) {
  return exact_binomial(n, k).str();
}

double log_binomial_oracle(uint64_t n, uint64_t k) {
  if (k > n) throw std::domain_error("log_binomial_oracle: k > n");
  return log_of(exact_binomial(n, k));
}

double entropy_oracle(double t) {
  const float50 x(t);
  const float50 h = -x * log(x) - (1 - x) * log(1 - x);
  return static_cast<double>(h);
}

double curve_log_oracle(double rho) {
  const float50 r(rho);
  const float50 s41 = sqrt(float50(41));
  const float50 rho0 = (33 - 5 * s41) / 16;
  const float50 d = sqrt(2 * rho0) - sqrt(2 * r);
  return static_cast<double>(log(1 / (2 * r)) + 1 - d * d / (4 * r));
}

double borned1_even_lhs_oracle(uint64_t m, uint64_t n) {
  if (n == 0 || n > m) throw std::domain_error("borned1 oracle: need 1<=n<=m");
  const big_float v = big_float(n) * big_float(exact_binomial(2 * m, m - n));
  return static_cast<double>(log(v) - 2.0 * static_cast<double>(m) *
                                          log(big_float(2)));
}

double borned1_odd_lhs_oracle(uint64_t m, uint64_t n) {
  if (n == 0 || n > m) throw std::domain_error("borned1 oracle: need 1<=n<=m");
  const big_float v = (big_float(n) + big_float(1) / 2) *
                      big_float(exact_binomial(2 * m + 1, m - n));
  return static_cast<double>(log(v) - 2.0 * static_cast<double>(m) *
                                          log(big_float(2)));
}

BorneD1Sweep borned1_sweep_oracle(uint64_t limit) {
  BorneD1Sweep sweep;
  sweep.all_hold = true;
  sweep.min_margin_even = std::numeric_limits<double>::infinity();
  sweep.min_margin_odd = std::numeric_limits<double>::infinity();
  const double ln2 = static_cast<double>(log(big_float(2)));
  for (uint64_t m = 1; m <= limit; ++m) {
    // Walk k = m-n upward with the multiplicative row recurrences, so each
    // binomial costs one exact big-integer multiply/divide.
    big_int even = exact_binomial(2 * m, 0);     // k = 0 -> n = m
    big_int odd = exact_binomial(2 * m + 1, 0);  // k = 0 -> n = m
    const double md = static_cast<double>(m);
    for (uint64_t k = 0; k < m; ++k) {
      const uint64_t n = m - k;
      const double nd = static_cast<double>(n);
      const double lhs_even =
          static_cast<double>(log(big_float(n) * big_float(even))) -
          2.0 * md * ln2;
      const double rhs_even = 5.0 - 0.6321 * nd * nd / md;
      const double margin_even = rhs_even - lhs_even;
      if (margin_even < sweep.min_margin_even) {
        sweep.min_margin_even = margin_even;
        sweep.argmin_even_m = m;
        sweep.argmin_even_n = n;
      }
      const double lhs_odd = static_cast<double>(log(
                                 (big_float(n) + big_float(1) / 2) *
                                 big_float(odd))) -
                             2.0 * md * ln2;
      const double rhs_odd = 2.0 - 0.6555 * nd * nd / md;
      const double margin_odd = rhs_odd - lhs_odd;
      if (margin_odd < sweep.min_margin_odd) {
        sweep.min_margin_odd = margin_odd;
        sweep.argmin_odd_m = m;
        sweep.argmin_odd_n = n;
      }
      if (margin_even <= 0.0 || margin_odd <= 0.0) sweep.all_hold = false;
      ++sweep.pairs_checked;
      even = even * (2 * m - k) / (k + 1);
      odd = odd * (2 * m + 1 - k) / (k + 1);
    }
  }
  return sweep;
}

namespace {

// Characteristic polynomial x^d + c[d-1] x^{d-1} + ... + c[0] by the
// Faddeev-LeVerrier recurrence, in long double.
[[nodiscard]] std::array<long double, 4> charpoly_coeffs(
    const Eigen::MatrixXd& a) {
  const int d = static_cast<int>(a.rows());
  using LMat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  LMat al = a.cast<long double>();
  LMat mk = LMat::Identity(d, d);
  std::array<long double, 4> c{};
  for (int k = 1; k <= d; ++k) {
    mk = al * mk;
    const long double ck = -mk.trace() / k;
    c[static_cast<size_t>(d - k)] = ck;
    mk.diagonal().array() += ck;
  }
  return c;
}

[[nodiscard]] long double eval_poly(const std::array<long double, 4>& c,
                                    int d, long double x) {
  long double v = 1.0L;
  for (int i = d - 1; i >= 0; --i) v = v * x + c[static_cast<size_t>(i)];
  return v;
}

[[nodiscard]] long double eval_dpoly(const std::array<long double, 4>& c,
                                     int d, long double x) {
  long double v = d;
  for (int i = d - 1; i >= 1; --i) {
    v = v * x + i * c[static_cast<size_t>(i)];
  }
  return v;
}

void solve_quadratic(long double b, long double c,
                     std::vector<long double>& roots) {
  const long double disc = b * b - 4.0L * c;
  const long double s = std::sqrt(std::max(disc, 0.0L));
  roots.push_back((-b - s) / 2.0L);
  roots.push_back((-b + s) / 2.0L);
}

// All-real cubic x^3 + b x^2 + c x + d via the trigonometric method.
void solve_cubic(long double b, long double c, long double d,
                 std::vector<long double>& roots) {
  const long double p = c - b * b / 3.0L;
  const long double q = 2.0L * b * b * b / 27.0L - b * c / 3.0L + d;
  if (p >= -1e-30L) {  // triple (or near-triple) root for symmetric input
    const long double t = std::cbrt(-q);
    roots.insert(roots.end(), 3, t - b / 3.0L);
    return;
  }
  const long double mfac = 2.0L * std::sqrt(-p / 3.0L);
  long double arg = 3.0L * q / (p * mfac);
  arg = std::clamp(arg, -1.0L, 1.0L);
  const long double theta = std::acos(arg) / 3.0L;
  constexpr long double two_pi_3 = 2.0943951023931954923L;
  for (int k = 0; k < 3; ++k) {
    roots.push_back(mfac * std::cos(theta - two_pi_3 * k) - b / 3.0L);
  }
}

// All-real quartic x^4 + b x^3 + c x^2 + d x + e by Ferrari's factorization
// through the resolvent cubic.
void solve_quartic(long double b, long double c, long double d, long double e,
                   std::vector<long double>& roots) {
  const long double b2 = b * b;
  const long double p = c - 3.0L * b2 / 8.0L;
  const long double q = d - b * c / 2.0L + b2 * b / 8.0L;
  const long double r =
      e - b * d / 4.0L + b2 * c / 16.0L - 3.0L * b2 * b2 / 256.0L;
  std::vector<long double> ys;
  if (std::abs(q) <= 1e-24L * (1.0L + std::abs(p) + std::abs(r))) {
    std::vector<long double> zs;
    solve_quadratic(p, r, zs);  // z^2 + p z + r, z = y^2
    for (const long double z : zs) {
      const long double s = std::sqrt(std::max(z, 0.0L));
      ys.push_back(-s);
      ys.push_back(s);
    }
  } else {
    std::vector<long double> zs;
    solve_cubic(2.0L * p, p * p - 4.0L * r, -q * q, zs);
    const long double z = std::max({zs[0], zs[1], zs[2]});
    const long double w = std::sqrt(std::max(z, 0.0L));
    if (w <= 0.0L) {
      solve_quadratic(p, r, zs);
      for (const long double zz : zs) {
        const long double s = std::sqrt(std::max(zz, 0.0L));
        ys.push_back(-s);
        ys.push_back(s);
      }
    } else {
      const long double half = (p + z) / 2.0L;
      const long double shift = q / (2.0L * w);
      solve_quadratic(w, half - shift, ys);
      solve_quadratic(-w, half + shift, ys);
    }
  }
  for (const long double y : ys) roots.push_back(y - b / 4.0L);
}

}  // namespace

std::vector<double> charpoly_eigs_oracle(const Eigen::MatrixXd& a) {
  const int d = static_cast<int>(a.rows());
  if (d < 1 || d > 4 || a.cols() != a.rows()) {
    throw std::domain_error(
        "charpoly_eigs_oracle: need a square matrix of dimension 1..4");
  }
  const auto c = charpoly_coeffs(a);
  std::vector<long double> roots;
  switch (d) {
    case 1:
      roots.push_back(-c[0]);
      break;
    case 2:
      solve_quadratic(c[1], c[0], roots);
      break;
    case 3:
      solve_cubic(c[2], c[1], c[0], roots);
      break;
    default:
      solve_quartic(c[3], c[2], c[1], c[0], roots);
      break;
  }
  const long double scale =
      std::max(1.0L, static_cast<long double>(a.cwiseAbs().maxCoeff()));
  for (long double& x : roots) {
    for (int it = 0; it < 6; ++it) {  // Newton polish on the polynomial
      const long double f = eval_poly(c, d, x);
      const long double df = eval_dpoly(c, d, x);
      if (std::abs(df) <= 1e-28L * scale) break;
      const long double step = f / df;
      x -= step;
      if (std::abs(step) <= 1e-22L * scale) break;
    }
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> out(roots.size());
  for (size_t i = 0; i < roots.size(); ++i) {
    out[i] = static_cast<double>(roots[i]);
  }
  return out;
}

double l1_vertex_optimum_oracle(const Eigen::MatrixXd& m,
                                const Eigen::VectorXd& y) {
  const int n = static_cast<int>(m.rows());
  const int p = static_cast<int>(m.cols());
  if (n < 1 || p < n || p > 24) {
    throw std::domain_error(
        "l1_vertex_optimum_oracle: need 1 <= rows <= cols <= 24");
  }
  if (m.rows() != y.size()) {
    throw std::invalid_argument("l1_vertex_optimum_oracle: size mismatch");
  }
  // The optimum of this bounded feasible LP is attained at a basic solution:
  // some invertible n-column subset B with candidate B^{-1} y.
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  Eigen::MatrixXd basis(n, n);
  for (;;) {
    for (int j = 0; j < n; ++j) {
      basis.col(j) = m.col(idx[static_cast<size_t>(j)]);
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (lu.isInvertible()) {
      best = std::min(best, lu.solve(y).lpNorm<1>());
    }
    int i = n - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == p - n + i) --i;
    if (i < 0) break;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return best;
}

double sigma_s_bruteforce_oracle(const Eigen::VectorXd& x, uint64_t s) {
  const auto p = static_cast<uint64_t>(x.size());
  if (p > 20) throw std::domain_error("sigma_s_bruteforce_oracle: dim > 20");
  if (s > p) throw std::domain_error("sigma_s_bruteforce_oracle: s > dim");
  double best = std::numeric_limits<double>::infinity();
  for (uint64_t mask = 0; mask < (uint64_t{1} << p); ++mask) {
    if (static_cast<uint64_t>(__builtin_popcountll(mask)) != s) continue;
    double off = 0.0;
    for (uint64_t i = 0; i < p; ++i) {
      if ((mask & (uint64_t{1} << i)) == 0) {
        off += std::abs(x(static_cast<Eigen::Index>(i)));
      }
    }
    best = std::min(best, off);
  }
  return best;
}

}  // namespace riclab::selftest
