#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "oracles.hpp"
#include "riclab/riclab.hpp"

namespace riclab::selftest {

namespace {

[[nodiscard]] std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Checker {
 public:
  explicit Checker(std::string suite) { result_.suite = std::move(suite); }

  void is_true(std::string name, bool pass, std::string detail = "") {
    result_.checks.push_back({std::move(name), pass, std::move(detail)});
  }

  void close_abs(std::string name, double actual, double expected,
                 double tol) {
    const bool pass =
        std::isfinite(actual) && std::abs(actual - expected) <= tol;
    is_true(std::move(name), pass,
            "actual=" + fmt(actual) + " expected=" + fmt(expected) +
                " tol_abs=" + fmt(tol));
  }

  void close_rel(std::string name, double actual, double expected,
                 double tol) {
    const double denom = std::max(std::abs(expected), 1e-300);
    const bool pass = std::isfinite(actual) &&
                      std::abs(actual - expected) / denom <= tol;
    is_true(std::move(name), pass,
            "actual=" + fmt(actual) + " expected=" + fmt(expected) +
                " tol_rel=" + fmt(tol));
  }

  template <class Exc, class Fn>
  void throws(std::string name, Fn&& fn) {
    bool pass = false;
    std::string detail = "no exception thrown";
    try {
      (void)fn();
    } catch (const Exc&) {
      pass = true;
      detail.clear();
    } catch (const std::exception& e) {
      detail = std::string("wrong exception type: ") + e.what();
    }
    is_true(std::move(name), pass, std::move(detail));
  }

  [[nodiscard]] SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

// ---------------------------------------------------------------- constants

SuiteResult suite_constants() {
  return constants_suite_with(universal_constants());
}

// ------------------------------------------------------------------ entropy

SuiteResult suite_entropy() {
  Checker c("entropy");
  c.close_abs("H(0.5) equals ln 2", shannon_entropy(0.5), std::numbers::ln2,
              1e-15);
  c.close_abs("H(0.02) matches the 50-digit reference",
              shannon_entropy(0.02), 0.09803911327973198061225941, 1e-14);
  c.close_rel("H(5e-7) matches the 50-digit reference",
              shannon_entropy(5e-7), 7.754328744262088873424049e-6, 1e-13);

  double max_sym = 0.0;
  for (int i = 1; i <= 49; ++i) {
    const double t = 0.01 * i;
    max_sym = std::max(max_sym, std::abs(shannon_entropy(t) -
                                         shannon_entropy(1.0 - t)));
  }
  c.is_true("H is symmetric about 1/2 on a grid", max_sym <= 1e-14,
            "max |H(t) - H(1-t)| = " + fmt(max_sym));

  Rng rng(20240901);
  bool concave = true;
  for (int i = 0; i < 1000; ++i) {
    const double a = 1e-9 + (1.0 - 2e-9) * rng.uniform();
    const double b = 1e-9 + (1.0 - 2e-9) * rng.uniform();
    const double mid = shannon_entropy(0.5 * (a + b));
    const double avg = 0.5 * (shannon_entropy(a) + shannon_entropy(b));
    if (mid + 1e-12 < avg) concave = false;
  }
  c.is_true("H is midpoint-concave on 10^3 seeded pairs", concave);

  double max_oracle = 0.0;
  for (const double t : {1e-6, 0.02, 0.3, 0.5, 0.77, 1.0 - 1e-6}) {
    max_oracle = std::max(max_oracle,
                          std::abs(shannon_entropy(t) - entropy_oracle(t)));
  }
  c.is_true("H agrees with the 50-digit oracle", max_oracle <= 1e-14,
            "max abs diff = " + fmt(max_oracle));

  c.throws<std::domain_error>("H rejects t = 0",
                              [] { return shannon_entropy(0.0); });
  c.throws<std::domain_error>("H rejects t = 1",
                              [] { return shannon_entropy(1.0); });
  c.throws<std::domain_error>("H rejects t outside (0,1)",
                              [] { return shannon_entropy(1.5); });
  return c.take();
}

// ----------------------------------------------------------------- logbinom

SuiteResult suite_logbinom() {
  Checker c("logbinom");
  c.close_abs("ln C(2,0) is exactly 0", log_binomial(2, 0), 0.0, 0.0);
  c.close_abs("ln C(200,200) is exactly 0", log_binomial(200, 200), 0.0, 0.0);
  c.close_abs("ln C(4,2) equals ln 6", log_binomial(4, 2),
              1.791759469228055000812477, 1e-12);
  c.close_rel("ln C(200,4) equals ln 64684950", log_binomial(200, 4),
              17.98503912035710719626586, 1e-12);

  const std::pair<uint64_t, uint64_t> pairs[] = {
      {4, 2}, {200, 4}, {61, 30}, {1000, 137}, {5000, 2500}, {1000000, 11}};
  double max_rel = 0.0;
  for (const auto& [p, r] : pairs) {
    const double lib = log_binomial(p, r);
    const double ref = log_binomial_oracle(p, r);
    max_rel = std::max(max_rel, std::abs(lib - ref) / std::abs(ref));
  }
  c.is_true("log_binomial matches exact big-integer logs to 1e-9 relative",
            max_rel <= 1e-9, "max rel err = " + fmt(max_rel));

  c.is_true("decimal oracle C(200,4)",
            binomial_decimal_oracle(200, 4) == "64684950",
            binomial_decimal_oracle(200, 4));
  c.is_true("decimal oracle C(20,2)", binomial_decimal_oracle(20, 2) == "190",
            binomial_decimal_oracle(20, 2));
  c.is_true("decimal oracle C(2,0)", binomial_decimal_oracle(2, 0) == "1",
            binomial_decimal_oracle(2, 0));

  c.throws<std::domain_error>("log_binomial rejects r > p",
                              [] { return log_binomial(3, 4); });
  return c.take();
}

// ----------------------------------------------------------------- envelope

SuiteResult suite_envelope() {
  Checker c("envelope");
  c.close_rel("Theta(100,2) matches the 50-digit reference",
              binomial_envelope_theta(100, 2),
              0.5105313384160916854500387, 1e-12);
  c.close_rel("Theta(10,5) matches the 50-digit reference",
              binomial_envelope_theta(10, 5), 0.489312923018483927844642,
              1e-12);

  double min_margin = std::numeric_limits<double>::infinity();
  uint64_t arg_p = 0, arg_r = 0;
  for (uint64_t p = 2; p <= 60; ++p) {
    for (uint64_t r = 1; r < p; ++r) {
      const double margin =
          std::log(binomial_envelope_theta(p, r)) +
          static_cast<double>(p) *
              shannon_entropy(static_cast<double>(r) /
                              static_cast<double>(p)) -
          log_binomial_oracle(p, r);
      if (margin < min_margin) {
        min_margin = margin;
        arg_p = p;
        arg_r = r;
      }
    }
  }
  c.is_true("envelope C(p,r) <= Theta e^{pH(r/p)} holds for all p <= 60",
            min_margin > 0.0, "min log margin = " + fmt(min_margin));
  c.close_abs("minimal envelope margin matches the frozen reference",
              min_margin, 0.197495442495, 1e-9);
  c.is_true("minimal envelope margin is attained at (p,r) = (2,1)",
            arg_p == 2 && arg_r == 1,
            "argmin p=" + std::to_string(arg_p) +
                " r=" + std::to_string(arg_r));

  const double spot = std::log(binomial_envelope_theta(10, 5)) +
                      10.0 * shannon_entropy(0.5) - log_binomial(10, 5);
  c.is_true("envelope holds at (10,5) with library log-binomial", spot > 0.0,
            "log margin = " + fmt(spot));

  c.throws<std::domain_error>("Theta rejects r = 0",
                              [] { return binomial_envelope_theta(10, 0); });
  c.throws<std::domain_error>("Theta rejects r = p",
                              [] { return binomial_envelope_theta(5, 5); });
  return c.take();
}

// ----------------------------------------------------------------- stirling

SuiteResult suite_stirling() {
  Checker c("stirling");
  bool in_range = true;
  double worst = 0.5;
  for (int i = 0; i < 10000; ++i) {
    const double z = std::pow(10.0, -3.0 + 9.0 * i / 9999.0);
    const double th = stirling_theta(z);
    if (!(th > 0.0 && th < 1.0)) {
      in_range = false;
      worst = th;
    }
  }
  c.is_true("theta(z) lies in (0,1) on 10^4 log-spaced z in [1e-3, 1e6]",
            in_range, in_range ? "" : "violation theta=" + fmt(worst));

  c.close_abs("theta(1) matches the 50-digit reference", stirling_theta(1.0),
              0.9727376015439270986360432, 1e-13);
  c.close_abs("theta(10) matches the 50-digit reference",
              stirling_theta(10.0), 0.9996676120035445507763182, 1e-13);
  c.close_abs("theta(1e-3) matches the 50-digit reference",
              stirling_theta(1e-3), 0.03050724561560513462108498, 1e-12);
  c.close_abs("theta(1e6) matches the 50-digit reference",
              stirling_theta(1e6), 0.9999999999999666666666667, 1e-12);

  const double jump =
      std::abs(stirling_theta(8.0 * (1.0 - 1e-9)) -
               stirling_theta(8.0 * (1.0 + 1e-9)));
  c.is_true("series and direct branches agree at the z = 8 switch",
            jump <= 1e-8, "branch jump = " + fmt(jump));

  c.throws<std::domain_error>("theta rejects z = 0",
                              [] { return stirling_theta(0.0); });
  c.throws<std::domain_error>("theta rejects negative z",
                              [] { return stirling_theta(-1.0); });
  return c.take();
}

// ----------------------------------------------------------------- borned1

SuiteResult suite_borned1() {
  Checker c("borned1");
  const BorneD1Sweep sweep = borned1_sweep_oracle(500);
  c.is_true("both binomial log bounds hold for all 1 <= n <= m <= 500",
            sweep.all_hold);
  c.is_true("sweep covers all 125250 pairs", sweep.pairs_checked == 125250,
            std::to_string(sweep.pairs_checked));
  c.close_abs("minimal even-row margin matches the frozen reference",
              sweep.min_margin_even, 5.754194361, 1e-6);
  c.is_true("even-row margin minimizer is (m,n) = (1,1)",
            sweep.argmin_even_m == 1 && sweep.argmin_even_n == 1,
            "m=" + std::to_string(sweep.argmin_even_m) +
                " n=" + std::to_string(sweep.argmin_even_n));
  c.close_abs("minimal odd-row margin matches the frozen reference",
              sweep.min_margin_odd, 2.226241062, 1e-6);
  c.is_true("odd-row margin minimizer is (m,n) = (500,26)",
            sweep.argmin_odd_m == 500 && sweep.argmin_odd_n == 26,
            "m=" + std::to_string(sweep.argmin_odd_m) +
                " n=" + std::to_string(sweep.argmin_odd_n));

  const BinomialLogBounds b11 = binomial_log_bound_check(1, 1);
  c.close_abs("(1,1) even lhs equals ln(1/4)", b11.even.lhs,
              -1.3862943611198906188, 1e-12);
  c.close_abs("(1,1) even rhs equals 5 - 0.6321", b11.even.rhs, 4.3679,
              1e-12);
  c.close_abs("(1,1) odd lhs equals ln(3/8)", b11.odd.lhs,
              -0.98082925301172623686, 1e-12);
  c.close_abs("(1,1) odd rhs equals 2 - 0.6555", b11.odd.rhs, 1.3445, 1e-12);

  double max_diff = 0.0;
  const std::pair<uint64_t, uint64_t> pts[] = {
      {1, 1}, {10, 3}, {137, 41}, {500, 26}, {500, 500}, {200, 1}};
  for (const auto& [m, n] : pts) {
    const BinomialLogBounds lib = binomial_log_bound_check(m, n);
    max_diff = std::max(max_diff,
                        std::abs(lib.even.lhs - borned1_even_lhs_oracle(m, n)));
    max_diff = std::max(max_diff,
                        std::abs(lib.odd.lhs - borned1_odd_lhs_oracle(m, n)));
  }
  c.is_true("library lhs agrees with exact big-integer logs",
            max_diff <= 1e-9, "max abs diff = " + fmt(max_diff));

  bool diag_ok = true;
  for (uint64_t m = 2; m <= 50; ++m) {
    const BinomialLogBounds lib = binomial_log_bound_check(m, m);
    const double md = static_cast<double>(m);
    const double expect = std::log(md) - 2.0 * md * std::numbers::ln2;
    if (std::abs(lib.even.lhs - expect) > 1e-9) diag_ok = false;
    if (!(lib.even.lhs <= lib.even.rhs)) diag_ok = false;
  }
  c.is_true("diagonal n = m reduces to ln(m/4^m) and satisfies the bound",
            diag_ok);

  c.throws<std::domain_error>("n > m is rejected",
                              [] { return binomial_log_bound_check(2, 3); });
  c.throws<std::domain_error>("n = 0 is rejected",
                              [] { return binomial_log_bound_check(5, 0); });
  return c.take();
}

// ------------------------------------------------------------------- ratefn

SuiteResult suite_ratefn() {
  Checker c("ratefn");

  c.close_abs("W_ds(0.1, 0.2) = 0.02", rate_ds(0.1, 0.2), 0.02, 1e-15);
  c.is_true("W_ds(., 0) = 0", rate_ds(0.3, 0.0) == 0.0);
  c.close_abs("W_ds^{-1}(., 2) = 2", rate_ds_inv(0.1, 2.0), 2.0, 1e-15);
  c.close_abs("W_ds^{-1} at H(0.02)/0.5 reproduces the t0 reference",
              rate_ds_inv(0.04, shannon_entropy(0.02) / 0.5),
              0.626223964024795143777365, 1e-12);

  c.close_rel("W_lr(0.04, 1.0, 1) = 5/36 (linear branch)",
              rate_lr(0.04, 1.0, 1.0), 0.1388888888888888888888889, 1e-13);
  c.close_rel("W_lr^min(0.04, 0.1, 1) matches the reference (3/2 branch)",
              rate_lr_min(0.04, 0.1, 1.0), 0.02762135864009951267190798,
              1e-13);

  {
    const double sr = 0.3;  // rhobar = 0.09
    const double bp = sr * (1.0 + sr) * (1.0 + sr);
    const double left = std::pow(0.09, 0.25) * std::pow(bp, 1.5) /
                        (1.0 * (1.0 + sr) * (1.0 + sr) * (1.0 + sr));
    const double right = sr * bp / (1.0 * (1.0 + sr) * (1.0 + sr));
    c.close_abs("W_lr branches agree at the breakpoint (rhobar = 0.09)",
                left - right, 0.0, 1e-12);
    c.close_abs("W_lr is continuous across the breakpoint",
                rate_lr(0.09, bp * (1.0 + 1e-12), 1.0) -
                    rate_lr(0.09, bp * (1.0 - 1e-12), 1.0),
                0.0, 1e-9);
  }

  {
    bool dominance = true;
    double min_gap = std::numeric_limits<double>::infinity();
    for (const double rb : {0.01, 0.04, 0.09, 0.12, 0.5}) {
      for (int i = 0; i <= 200; ++i) {
        const double t = 3.0 * i / 200.0;
        const double lo = rate_lr(rb, t, 1.0);
        const double hi = rate_lr_min(rb, t, 1.0);
        if (lo > hi + 1e-15) dominance = false;
        if (t > 0.0) min_gap = std::min(min_gap, hi - lo);
      }
    }
    c.is_true("W_lr <= W_lr^min pointwise on dense grids", dominance,
              "min gap = " + fmt(min_gap));
  }

  {
    const double u = 0.04;  // = rhobar / c_lr boundary
    const double e2 = 1.2 * 1.2;
    const double branch_a =
        std::pow(1.0, 2.0 / 3.0) * e2 / std::pow(0.04, 1.0 / 6.0) *
        std::pow(u, 2.0 / 3.0);
    const double branch_b = 1.0 * e2 / 0.2 * u;
    c.close_abs("W_lr^{-1} branches agree at u = rhobar/c_lr",
                branch_a - branch_b, 0.0, 1e-12);
  }

  c.close_rel("W_fs(0.04, 0.4, 837) matches the reference",
              rate_fs(0.04, 0.4, 837.0), 1.915182800299149689565789e-5,
              1e-12);
  c.close_abs("W_fs^{-1} inverts the previous example to 0.4",
              rate_fs_inv(0.04, 1.915182800299149689565789e-5, 837.0), 0.4,
              1e-6);

  {
    bool cdec = true;
    for (const double t : {0.1, 0.5, 1.0, 2.0}) {
      if (!(rate_lr(0.04, t, 2.0) < rate_lr(0.04, t, 1.0))) cdec = false;
      if (!(rate_fs(0.04, t, 900.0) < rate_fs(0.04, t, 837.0))) cdec = false;
      if (!(rate_tw(0.04, t, 2.0) < rate_tw(0.04, t, 1.0))) cdec = false;
    }
    c.is_true("rates decrease pointwise as their constants grow", cdec);
  }

  {
    bool cont = true;
    double worst = 0.0;
    for (const double rb : {0.01, 0.05, 0.1}) {
      const double sr = std::sqrt(rb);
      for (const double bp : {sr, 1.0}) {
        const double d = std::abs(rate_tw(rb, bp * (1.0 + 1e-12), 1.0) -
                                  rate_tw(rb, bp * (1.0 - 1e-12), 1.0));
        worst = std::max(worst, d);
        if (d > 1e-9) cont = false;
      }
    }
    c.is_true("W_tw is continuous at both branch points", cont,
              "max jump = " + fmt(worst));
  }

  {
    const RateModel models[] = {RateModel::tw(), RateModel::ds(),
                                RateModel::lr(), RateModel::fs()};
    double max_rel = 0.0;
    bool increasing = true, vanish = true;
    for (const RateModel& m : models) {
      for (const double rb : {0.01, 0.04, 0.09, 0.12}) {
        if (rate(m, rb, 0.0) != 0.0) vanish = false;
        double prev = 0.0;
        for (int i = 1; i <= 60; ++i) {
          const double t = 0.01 + (3.0 - 0.01) * i / 60.0;
          const double u = rate(m, rb, t);
          if (!(u > prev)) increasing = false;
          prev = u;
          const double t2 = rate_inv(m, rb, u);
          max_rel = std::max(max_rel, std::abs(t2 - t) / t);
        }
        // The fs inverse is doubly exponential in u, so only levels whose
        // inverse stays representable in double precision are exercised.
        const std::vector<double> ugrid =
            m.kind == RateKind::fs
                ? std::vector<double>{1e-4, 1e-3, 1e-2, 0.1}
                : std::vector<double>{1e-4, 1e-3, 1e-2, 0.1, 0.5, 1.0};
        for (const double u : ugrid) {
          const double t = rate_inv(m, rb, u);
          const double u2 = rate(m, rb, t);
          max_rel = std::max(max_rel, std::abs(u2 - u) / u);
        }
      }
    }
    c.is_true("every W vanishes at t = 0", vanish);
    c.is_true("every W is strictly increasing on its grid", increasing);
    c.is_true("round trips W o W^{-1} = id hold to 1e-9 relative",
              max_rel <= 1e-9, "max rel err = " + fmt(max_rel));
  }

  {
    const GrowthPoint pt(0.5, 0.04);
    const auto t0 = t_zero(RateModel::ds(), pt);
    c.is_true("t_zero(ds) is defined at (0.5, 0.04)", t0.has_value());
    if (t0) {
      c.close_abs("t_zero(ds, 0.5, 0.04) matches the reference", *t0,
                  0.626223964024795143777365, 1e-12);
    }
    const auto t0fs = t_zero(RateModel::fs(), pt);
    c.is_true("t_zero(fs) is defined at (0.5, 0.04)", t0fs.has_value());
    if (t0fs) {
      c.close_abs("ln t_zero(fs, 0.5, 0.04) matches the reference",
                  std::log(*t0fs), 325.9008950838941930185429, 1e-9);
    }
    c.is_true("t_zero defined for the tw and lr models too",
              t_zero(RateModel::tw(), pt).has_value() &&
                  t_zero(RateModel::lr(), pt).has_value());
    c.is_true("theorem budget flag: rhobar = 0.04 is inside",
              pt.within_theorem_budget());
    c.is_true("theorem budget flag: rhobar = 0.4 is outside",
              !GrowthPoint(0.5, 0.4).within_theorem_budget());
  }

  c.throws<std::domain_error>("negative t is rejected",
                              [] { return rate_ds(0.1, -1.0); });
  c.throws<std::domain_error>("negative u is rejected",
                              [] { return rate_lr_inv(0.1, -1.0, 1.0); });
  c.throws<std::domain_error>("rhobar outside (0,1) is rejected",
                              [] { return rate_tw(1.0, 0.5, 1.0); });
  c.throws<std::domain_error>("nonpositive constants are rejected",
                              [] { return rate_fs(0.1, 0.5, 0.0); });
  c.throws<std::domain_error>("GrowthPoint rejects delta outside (0,1)",
                              [] { return GrowthPoint(1.5, 0.04); });
  c.throws<std::domain_error>("GrowthPoint rejects rhobar outside (0,1)",
                              [] { return GrowthPoint(0.5, 1.2); });
  return c.take();
}

// ---------------------------------------------------------------- ricbounds

SuiteResult suite_ricbounds() {
  Checker c("ricbounds");
  const double rho0 = rho_zero();
  const double tau0 = tau_zero();

  {
    const auto g = gamma_of({0.0, 0.0});
    c.is_true("gamma(0,0) = 1", g.has_value() && *g == 1.0);
    const auto gb = gamma_of({tau0, tau0});
    c.close_rel("gamma(tau0, tau0) equals gamma0", gb.value_or(0.0),
                gamma_zero(), 1e-12);
    c.is_true("gamma is degenerate at c_min >= 1",
              !gamma_of({1.0, 0.5}).has_value());
    c.is_true("condition holds at gamma = 1.9/0.7",
              srsr_condition_holds({0.3, 0.9}));
    c.is_true("condition fails at gamma = 6",
              !srsr_condition_holds({0.8, 0.2}));
  }

  {
    const auto k0 = srsr_kappa({0.0, 0.0});
    c.is_true("kappa(0,0) = 0", k0.has_value() && *k0 == 0.0);
    const auto kb = srsr_kappa({tau0, tau0});
    c.close_abs("kappa at the symmetric boundary is exactly 1",
                kb.value_or(0.0), 1.0, 1e-12);
    bool agree = true;
    const double g0 = (4.0 + std::sqrt(41.0)) * (4.0 + std::sqrt(41.0)) / 25.0;
    for (int i = 0; i < 10; ++i) {
      for (int j = 0; j < 20; ++j) {
        const RicPair ric{0.95 * i / 9.0, 3.0 * j / 19.0};
        const auto kappa = srsr_kappa(ric);
        const bool lhs = kappa.has_value() && *kappa < 1.0;
        const bool rhs = (1.0 + ric.c_max) / (1.0 - ric.c_min) < g0;
        if (lhs != rhs) agree = false;
      }
    }
    c.is_true("kappa < 1 iff gamma < gamma0 on a 200-point grid", agree);
    c.is_true("kappa is degenerate at c_min >= 1",
              !srsr_kappa({1.0, 0.1}).has_value());
  }

  {
    const GrowthPoint pt(0.5, 0.04);
    const auto eig = psi_bounds_eigen(RateModel::ds(), pt);
    c.is_true("eigen-route bounds defined at (ds, 0.5, 0.04)",
              eig.has_value());
    if (eig) {
      c.close_abs("eigen psi_min matches the reference", eig->psi_min,
                  0.986223964024795143777365, 1e-12);
      c.close_abs("eigen psi_max matches the reference", eig->psi_max,
                  1.066223964024795143777365, 1e-12);
      c.is_true("eigen report is admissible inside the theorem budget",
                eig->admissible());
    }
    const auto sing = psi_bounds_singular(RateModel::ds(), pt);
    c.is_true("singular-route bounds defined at (ds, 0.5, 0.04)",
              sing.has_value());
    if (sing) {
      c.close_abs("singular psi_min matches the reference", sing->psi_min,
                  0.9698018893207443075947463, 1e-12);
      c.close_abs("singular psi_max matches the reference", sing->psi_max,
                  2.335093966778436267514714, 1e-12);
    }
    const auto fs = psi_bounds_singular(RateModel::fs(), pt);
    c.is_true("singular psi_min caps at 1 once sqrt(rhobar) + t0 >= 1",
              fs.has_value() && fs->psi_min == 1.0,
              fs ? fmt(fs->psi_min) : "undefined");

    Rng rng(515151);
    double max_gap_err = 0.0, max_cap_err = 0.0;
    for (int i = 0; i < 25; ++i) {
      const GrowthPoint q(0.05 + 0.9 * rng.uniform(),
                          0.005 + 0.115 * rng.uniform());
      const auto e2 = psi_bounds_eigen(RateModel::ds(), q);
      const auto s2 = psi_bounds_singular(RateModel::ds(), q);
      if (e2) {
        max_gap_err = std::max(
            max_gap_err,
            std::abs(e2->psi_max - e2->psi_min - 2.0 * q.rhobar));
      }
      if (s2) {
        const double a = std::sqrt(q.rhobar) + s2->t0;
        const double want = a < 1.0 ? a * (2.0 - a) : 1.0;
        max_cap_err = std::max(max_cap_err, std::abs(s2->psi_min - want));
        if (!(s2->psi_min <= s2->psi_max)) max_cap_err = 1.0;
      }
    }
    c.is_true("eigen psi_max - psi_min = 2 rhobar on seeded points",
              max_gap_err <= 1e-13, "max abs err = " + fmt(max_gap_err));
    c.is_true("singular psi_min = min{1, a(2-a)} with a = sqrt(rhobar) + t0",
              max_cap_err <= 1e-13, "max abs err = " + fmt(max_cap_err));
    if (eig) {
      c.close_abs("eigen psi_max at t0 = 0 equals the upper MP edge - 1",
                  eig->psi_max - eig->t0, mp_edges(0.04).upper - 1.0, 1e-13);
    }
  }

  {
    Rng rng(626262);
    double max_diff = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double rho = rho0 * (1e-6 + (1.0 - 2e-6) * rng.uniform());
      const double sr = std::sqrt(rho);
      const double factored = 2.0 * tau0 * (sr - std::sqrt(rho0)) *
                              (sr - 1.0 / (2.0 * std::sqrt(rho0)));
      max_diff = std::max(max_diff, std::abs(t_star(rho) - factored));
    }
    c.is_true("t_* expanded and factored forms agree to 1e-12",
              max_diff <= 1e-12, "max abs diff = " + fmt(max_diff));
    c.close_rel("psi0_eigen tends to e/(2 rho0) at the right endpoint",
                psi0_eigen(rho0 * (1.0 - 1e-12), RateModel::ds()),
                22.09134770488068261296626, 1e-9);
    c.close_rel("psi0_singular tends to e/(2 rho0) at the right endpoint",
                psi0_singular(rho0 * (1.0 - 1e-12), RateModel::ds()),
                22.09134770488068261296626, 1e-9);
  }

  {
    Rng rng(737373);
    double max_rel = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double rho = rho0 * (1e-3 + (1.0 - 1e-3 - 1e-12) * rng.uniform());
      const double a = psi0_singular(rho, RateModel::ds());
      const double b = gaussian_srsr_curve(rho);
      max_rel = std::max(max_rel, std::abs(a - b) / b);
    }
    c.is_true("psi0_singular(., ds) equals the Gaussian curve to 1e-12",
              max_rel <= 1e-12, "max rel diff = " + fmt(max_rel));

    double max_log = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double rho = rho0 * std::pow(10.0, -8.0 * rng.uniform());
      const double la = psi0_singular_log(rho, RateModel::ds());
      const double lb = gaussian_srsr_curve_log(rho);
      max_log = std::max(max_log,
                         std::abs(la - lb) / std::max(1.0, std::abs(lb)));
    }
    c.is_true("log forms agree down to rho = 6e-10", max_log <= 1e-12,
              "max rel log diff = " + fmt(max_log));

    c.close_rel("curve(0.001) matches the 50-digit reference",
                gaussian_srsr_curve(0.001), 9.181162959964826247598827e-8,
                1e-11);
    c.close_abs("curve_log(0.001) matches the 50-digit reference",
                gaussian_srsr_curve_log(0.001), -16.20352686325168931259491,
                1e-10);
    c.is_true("curve crosses 1 inside (0.0028, 0.0033)",
              gaussian_srsr_curve(0.0028) < 1.0 &&
                  gaussian_srsr_curve(0.0033) > 1.0);
    double lo = 0.0028, hi = 0.0033;
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (lo + hi);
      (gaussian_srsr_curve_log(mid) < 0.0 ? lo : hi) = mid;
    }
    c.close_rel("curve = 1 crossing matches the bisection reference",
                0.5 * (lo + hi), 0.003047812810374140268450663, 1e-10);
    c.is_true("curve_log oracle agreement at 0.001",
              std::abs(gaussian_srsr_curve_log(0.001) -
                       curve_log_oracle(0.001)) <= 1e-10);
  }

  {
    c.close_abs("small-rho ds log threshold at 1e-4",
                small_rho_conditions_log(1e-4, RateModel::ds()),
                -299.1011858197576899355051, 1e-9);
    c.close_abs("exact curve log threshold at 1e-4",
                gaussian_srsr_curve_log(1e-4), -273.7972192413584226534381,
                1e-9);
    const double r4 = small_rho_conditions_log(1e-4, RateModel::ds()) /
                      gaussian_srsr_curve_log(1e-4);
    const double r5 = small_rho_conditions_log(1e-5, RateModel::ds()) /
                      gaussian_srsr_curve_log(1e-5);
    c.close_abs("ds log-threshold ratio at 1e-4", r4,
                1.092418639782068970395534, 1e-9);
    c.close_abs("ds log-threshold ratio at 1e-5", r5,
                1.026431930148892853854577, 1e-9);
    c.is_true("log-threshold ratio approaches 1 from above as rho -> 0",
              r4 > r5 && r5 > 1.0);
    c.close_rel("small-rho ds threshold at 0.001 is about 2.2e-11",
                small_rho_conditions(0.001, RateModel::ds()), 2.2e-11, 0.05);

    const double lr_expect =
        std::exp(-std::log(0.002) - tau0 / std::sqrt(0.002));
    c.close_rel("small-rho lr row matches its displayed form",
                small_rho_conditions(0.001, RateModel::lr()), lr_expect,
                1e-12);
    const double fs_expect = std::exp(
        -std::log(0.002) -
        std::pow(std::abs(std::log(0.001)), 1.5) /
            (std::pow(2.0, 1.5) * 837.0));
    c.close_rel("small-rho fs row matches its displayed form",
                small_rho_conditions(0.001, RateModel::fs()), fs_expect,
                1e-12);
    c.throws<std::invalid_argument>(
        "small-rho row for tw is rejected",
        [] { return small_rho_conditions(0.001, RateModel::tw()); });
  }

  {
    c.close_rel("regime-a ds value at (1e-6, 0.5)",
                regime_a_psi_max(1e-6, 0.5, RateModel::ds()),
                0.01315725172687508115018107, 1e-12);
    const auto exact =
        psi_bounds_singular(RateModel::ds(), GrowthPoint(0.5, 1e-6));
    c.is_true("exact singular psi_max defined at (0.5, 1e-6)",
              exact.has_value());
    if (exact) {
      c.close_rel("exact singular psi_max at (0.5, 1e-6)", exact->psi_max,
                  0.01318179410634241259030059, 1e-12);
      const double rel =
          std::abs(regime_a_psi_max(1e-6, 0.5, RateModel::ds()) -
                   exact->psi_max) /
          exact->psi_max;
      c.is_true("ds asymptotic matches exact within 10%", rel <= 0.10,
                "rel diff = " + fmt(rel));
    }

    c.close_rel("regime-a lr value at (1e-6, 0.5)",
                regime_a_psi_max(1e-6, 0.5, RateModel::lr()),
                0.01750865773852421941352518, 1e-12);
    const auto exact_lr =
        psi_bounds_eigen(RateModel::lr(), GrowthPoint(0.5, 1e-6));
    if (exact_lr) {
      const double rel =
          std::abs(regime_a_psi_max(1e-6, 0.5, RateModel::lr()) -
                   exact_lr->psi_max) /
          exact_lr->psi_max;
      c.is_true("lr asymptotic matches the exact eigen psi_max within 10%",
                rel <= 0.10, "rel diff = " + fmt(rel));
    }

    c.close_abs("regime-a fs log value at (1e-6, 0.5)",
                std::log(regime_a_psi_max(1e-6, 0.5, RateModel::fs())),
                505.1471715256682153054288, 1e-9);
    const auto exact_fs =
        psi_bounds_eigen(RateModel::fs(), GrowthPoint(0.5, 1e-6));
    if (exact_fs) {
      const double lrel =
          std::abs(std::log(regime_a_psi_max(1e-6, 0.5, RateModel::fs())) -
                   std::log(exact_fs->psi_max)) /
          std::log(exact_fs->psi_max);
      c.close_abs("fs asymptotic log agrees with the exact log to ~8%", lrel,
                  0.0762658459004022612974723, 1e-6);
    }

    bool dec = true;
    for (const RateModel& m : {RateModel::ds(), RateModel::lr()}) {
      double prev = std::numeric_limits<double>::infinity();
      for (const double rb : {1e-4, 1e-6, 1e-8, 1e-10}) {
        const double v = regime_a_psi_max(rb, 0.5, m);
        if (!(v < prev)) dec = false;
        prev = v;
      }
      if (!(prev < 1e-3)) dec = false;
    }
    c.is_true("ds and lr asymptotics decrease toward 0 as rhobar -> 0", dec);
    c.throws<std::invalid_argument>(
        "regime-a row for tw is rejected",
        [] { return regime_a_psi_max(0.01, 0.5, RateModel::tw()); });
  }

  {
    const auto d2 = d2_exponent(RateModel::ds(), 0.04, 0.5, 0.1);
    c.is_true("d2 exponent defined for ds", d2.has_value());
    if (d2) {
      c.close_abs("ds d2 equals [(t0 + 0.1)^2 - t0^2]/4", *d2,
                  0.03381119820123975718886825, 1e-12);
    }
    bool inc = true;
    for (const RateModel& m :
         {RateModel::tw(), RateModel::ds(), RateModel::lr()}) {
      double prev = 0.0;
      for (const double eps : {0.01, 0.05, 0.1, 0.5}) {
        const auto v = d2_exponent(m, 0.04, 0.5, eps);
        if (!v || !(*v > prev)) inc = false;
        if (v) prev = *v;
      }
    }
    c.is_true("d2 is strictly increasing in eps for tw, ds and lr", inc);
    // The fs rate is so flat that its t0 exceeds 1e141 here; adding any
    // practical eps cannot change W(t0) at double precision, so d2 is an
    // exact zero rather than a strictly increasing quantity.
    const auto dfs = d2_exponent(RateModel::fs(), 0.04, 0.5, 0.5);
    c.is_true("fs d2 collapses to zero at double precision",
              dfs.has_value() && *dfs >= 0.0 && *dfs <= 1e-100,
              dfs ? fmt(*dfs) : "undefined");
    c.throws<std::domain_error>("d2 rejects eps = 0", [] {
      return d2_exponent(RateModel::ds(), 0.04, 0.5, 0.0);
    });
  }

  c.throws<std::domain_error>("psi0 rejects rho >= rho0",
                              [&] { return psi0_eigen(rho0 + 0.01,
                                                      RateModel::ds()); });
  c.throws<std::domain_error>("curve rejects rho = 0",
                              [] { return gaussian_srsr_curve(0.0); });
  c.throws<std::domain_error>("t_star rejects rho outside (0, rho0)",
                              [] { return t_star(0.07); });
  return c.take();
}

// ----------------------------------------------------------------- fsconsts

SuiteResult suite_fsconsts() {
  Checker c("fsconsts");
  c.close_abs("d1_bound(1) = 8.31", d1_bound(1), 8.31, 1e-12);
  c.close_rel("d1_bound(2) matches the reference", d1_bound(2),
              1264.527542077277176456323, 1e-12);
  {
    bool mono = true;
    double prev = 0.0;
    for (uint64_t s = 1; s <= 30; ++s) {
      const double v = d1_bound(s);
      if (!(v > prev) || !std::isfinite(v)) mono = false;
      prev = v;
    }
    c.is_true("d1_bound is increasing and finite through the log switch",
              mono);
    c.close_rel("direct and log-space d1 evaluations agree at s = 20",
                d1_bound(20), std::exp(d1_bound_log(20)), 1e-12);
  }

  c.close_abs("path_bound(1, 54, 54) matches the reference",
              path_bound(1, 54, 54), 12.68645625077627391605055, 1e-10);
  {
    const double n = 4.0;
    const double diff = path_bound(8, 100, 100) - path_bound(4, 100, 100);
    c.is_true("doubling n adds at least (n/2) ln(MN) to the log bound",
              diff >= 0.5 * n * std::log(100.0 * 100.0),
              "log increment = " + fmt(diff));
  }
  c.throws<std::domain_error>("path_bound rejects m_rows > n_cols",
                              [] { return path_bound(1, 55, 54); });

  c.close_rel("trace_bound_delta(1, 54, 108) matches the reference",
              trace_bound_delta(1, 54, 108), 2434.689630256100067437858,
              1e-11);
  {
    bool inc = true;
    double prev = -std::numeric_limits<double>::infinity();
    for (uint64_t m = 1; m <= 10; ++m) {
      const double v = trace_bound_delta(m, 54, 108);
      if (!(v > prev)) inc = false;
      prev = v;
    }
    c.is_true("trace bound increases in m at fixed sizes", inc);
  }
  c.throws<std::domain_error>("trace bound rejects m_rows < 54",
                              [] { return trace_bound_delta(1, 53, 108); });
  c.throws<std::domain_error>("trace bound rejects M = N",
                              [] { return trace_bound_delta(1, 54, 54); });

  {
    const LogScaled tail = fs_tail_bound(54, 540, 5.0, 1.0);
    c.close_abs("fs tail log value matches the reference", tail.log_value,
                5.452674086809898812332112, 1e-10);
    c.close_rel("fs tail linear value matches the reference", tail.value(),
                233.3814143878914850983268, 1e-10);
    c.close_abs("N W_fs piece matches the reference",
                540.0 * rate_fs(0.1, 5.0, 837.0),
                0.1204168581095389871181827, 1e-10);
    const double limit = fs_tail_bound(54, 540, 1e-14, 2.0).value();
    c.close_rel("eps -> 0 limit equals c0 M / (1 - rho)", limit,
                2.0 * 54.0 / 0.9, 1e-6);
    bool dec = true;
    double prev = std::numeric_limits<double>::infinity();
    for (const double eps : {0.5, 1.0, 2.0, 4.0, 8.0}) {
      const double v = std::exp(-540.0 * rate_fs(0.1, eps, 837.0));
      if (!(v < prev)) dec = false;
      prev = v;
    }
    c.is_true("exp(-N W_fs) decreases in eps", dec);
    c.is_true("fs exponent is dominated by the ds exponent at (0.1, 0.3)",
              rate_fs(0.1, 0.3, 837.0) <= rate_ds(0.1, 0.3));
  }
  c.throws<std::domain_error>("fs tail rejects m_rows < 54",
                              [] { return fs_tail_bound(53, 540, 1.0); });
  c.throws<std::domain_error>("fs tail rejects eps = 0",
                              [] { return fs_tail_bound(54, 540, 0.0); });
  c.throws<std::domain_error>(
      "fs tail rejects nonpositive c0",
      [] { return fs_tail_bound(54, 540, 1.0, 0.0); });

  c.close_rel("fs moderate exponent matches the reference",
              fs_moderate_bound(54, 216, 0.4, 3300.0),
              -0.005203940020363146929824986, 1e-12);
  c.throws<std::domain_error>(
      "moderate bound rejects c_big = 3242 (strict)",
      [] { return fs_moderate_bound(54, 216, 0.4, 3242.0); });
  c.throws<std::domain_error>(
      "moderate bound rejects eps = sqrt(rho)",
      [] { return fs_moderate_bound(54, 216, 0.5, 3300.0); });

  {
    const ConstantChainReport rep = verify_constant_chain();
    c.is_true("constant chain verifies end to end", rep.all_ok);
    c.close_rel("c0_rad relation reproduces 95277.6",
                rep.relations[0].computed, 95277.6, 1e-12);
    c.close_rel("c_rad relation reproduces 830414.836",
                rep.relations[1].computed, 830414.836, 1e-9);
    c.close_rel("c_fs relation reproduces 837.056",
                rep.relations[2].computed, 837.0559457109184168655507, 1e-12);
    c.close_rel("v_rad relation reproduces 3242.084",
                rep.relations[3].computed, 3242.083937409077504439783, 1e-12);
    c.is_true("the 355.7 multiplier probe is flagged as a known mismatch",
              !rep.relations[4].expect_match && !rep.relations[4].within_tol &&
                  rep.relations[4].ok());
    c.close_rel("355.7 probe computes 1029552.308",
                rep.relations[4].computed, 1029552.308, 1e-9);
    FsConstants bad;
    bad.c_rad = 900000.0;
    c.is_true("corrupting c_rad breaks the chain",
              !verify_constant_chain(bad).all_ok);
  }
  return c.take();
}

// --------------------------------------------------------------- eig-oracle

SuiteResult suite_eig_oracle() {
  Checker c("eig-oracle");
  {
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(3, 3);
    const EigPair e = extreme_eigs(id);
    c.is_true("identity eigenvalues are exactly (1, 1)",
              e.lambda_min == 1.0 && e.lambda_max == 1.0);
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(2, 2);
    d(0, 0) = 0.25;
    d(1, 1) = 2.25;
    const EigPair ed = extreme_eigs(d);
    c.is_true("diagonal spectrum is read off exactly",
              std::abs(ed.lambda_min - 0.25) <= 1e-14 &&
                  std::abs(ed.lambda_max - 2.25) <= 1e-14);
  }

  {
    double max_err = 0.0;
    for (int i = 0; i < 100; ++i) {
      const int d = 1 + (i % 4);
      const Eigen::MatrixXd a = sample_matrix(
          {EnsembleKind::gaussian, derive_stream(881100, i)}, d, d);
      const Eigen::MatrixXd gram = a * a.transpose();
      const EigPair e = extreme_eigs(gram);
      const std::vector<double> roots = charpoly_eigs_oracle(gram);
      const double scale = std::max(1.0, std::abs(roots.back()));
      max_err = std::max(max_err,
                         std::abs(e.lambda_min - roots.front()) / scale);
      max_err = std::max(max_err,
                         std::abs(e.lambda_max - roots.back()) / scale);
    }
    c.is_true(
        "extreme eigenvalues match the characteristic-polynomial oracle",
        max_err <= 1e-8, "max rel err = " + fmt(max_err));
  }

  {
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(3, 3);
    const SingularPair s = extreme_singulars(id);
    c.is_true("identity singular values are (1, 1)",
              std::abs(s.sigma_min - 1.0) <= 1e-14 &&
                  std::abs(s.sigma_max - 1.0) <= 1e-14);
    Eigen::MatrixXd col(2, 1);
    col << 3.0, 4.0;
    const SingularPair sc = extreme_singulars(col);
    c.is_true("column (3,4) has singular value 5",
              std::abs(sc.sigma_min - 5.0) <= 1e-12 &&
                  std::abs(sc.sigma_max - 5.0) <= 1e-12);

    double max_rel = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const uint64_t rows = 2 + (i % 7);
      const uint64_t cols = 2 + ((i * 5 + 3) % 7);
      const Eigen::MatrixXd a = sample_matrix(
          {EnsembleKind::gaussian, derive_stream(992200, i)}, rows, cols);
      const SingularPair sv = extreme_singulars(a);
      const EigPair ev = extreme_eigs(a.transpose() * a);
      const double scale = std::max(1.0, ev.lambda_max);
      max_rel = std::max(
          max_rel, std::abs(sv.sigma_max * sv.sigma_max - ev.lambda_max) /
                       scale);
      if (rows >= cols) {
        max_rel = std::max(
            max_rel, std::abs(sv.sigma_min * sv.sigma_min - ev.lambda_min) /
                         scale);
      }
    }
    c.is_true("sigma^2 matches the Gram spectrum on 10^3 random matrices",
              max_rel <= 1e-8, "max rel err = " + fmt(max_rel));
  }

  {
    const MpEdges e = mp_edges(0.25);
    c.is_true("MP edges at 0.25 are (0.25, 2.25)",
              std::abs(e.lower - 0.25) <= 1e-14 &&
                  std::abs(e.upper - 2.25) <= 1e-14);
    const MpEdges tiny = mp_edges(1e-12);
    c.is_true("MP edges collapse to 1 as rhobar -> 0",
              std::abs(tiny.lower - 1.0) <= 3e-6 &&
                  std::abs(tiny.upper - 1.0) <= 3e-6);
    c.throws<std::domain_error>("MP edges reject rhobar >= 1",
                                [] { return mp_edges(1.5); });
  }

  {
    bool ok = true;
    for (const auto& [h, t] : std::vector<std::pair<uint64_t, uint64_t>>{
             {0, 10}, {10, 10}, {5, 10}, {1, 1000}, {999, 1000}}) {
      const auto [lo, hi] = wilson_interval(h, t);
      const double p = static_cast<double>(h) / static_cast<double>(t);
      if (!(0.0 <= lo && lo <= p && p <= hi && hi <= 1.0)) ok = false;
    }
    c.is_true("Wilson intervals bracket p_hat inside [0,1]", ok);
    const auto zero = wilson_interval(0, 10);
    const auto full = wilson_interval(10, 10);
    c.is_true("degenerate intervals clamp to the unit range",
              zero.first == 0.0 && full.second == 1.0);
    c.throws<std::domain_error>("Wilson interval rejects zero trials",
                                [] { return wilson_interval(0, 0); });
  }

  {
    Eigen::MatrixXd asym(2, 2);
    asym << 1.0, 0.5, -0.5, 1.0;
    c.throws<std::invalid_argument>("asymmetric input is rejected",
                                    [&] { return extreme_eigs(asym); });
    Eigen::MatrixXd nonsq(2, 3);
    nonsq.setZero();
    c.throws<std::invalid_argument>("non-square input is rejected",
                                    [&] { return extreme_eigs(nonsq); });
    Eigen::MatrixXd nan2 = Eigen::MatrixXd::Zero(2, 2);
    nan2(0, 0) = std::numeric_limits<double>::quiet_NaN();
    c.throws<std::invalid_argument>("non-finite input is rejected",
                                    [&] { return extreme_eigs(nan2); });
  }
  return c.take();
}

// ------------------------------------------------------------------- mc-dev

SuiteResult suite_mc_dev() {
  Checker c("mc-dev");

  {
    const Eigen::MatrixXd r =
        sample_matrix({EnsembleKind::rademacher, 5}, 20, 30);
    bool pm1 = true;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      for (Eigen::Index j = 0; j < r.cols(); ++j) {
        if (r(i, j) != 1.0 && r(i, j) != -1.0) pm1 = false;
      }
    }
    c.is_true("rademacher entries are exactly +-1", pm1);
    const Eigen::MatrixXd r2 =
        sample_matrix({EnsembleKind::rademacher, 5}, 20, 30);
    c.is_true("same seed reproduces the identical matrix", r == r2);

    const Eigen::MatrixXd big =
        sample_matrix({EnsembleKind::rademacher, 77}, 1000, 1000);
    c.is_true("rademacher mean of 10^6 entries is within 4e-3 of 0",
              std::abs(big.mean()) <= 4e-3, fmt(big.mean()));
    const Eigen::MatrixXd g =
        sample_matrix({EnsembleKind::gaussian, 78}, 1000, 1000);
    const double var = g.array().square().mean() - g.mean() * g.mean();
    c.is_true("gaussian variance of 10^6 entries lies in [0.99, 1.01]",
              var >= 0.99 && var <= 1.01, fmt(var));
  }

  {
    const DeviationEstimate a =
        mc_deviation({EnsembleKind::gaussian, 7}, 40, 0.2, 0.5, 200);
    const DeviationEstimate b =
        mc_deviation({EnsembleKind::gaussian, 7}, 40, 0.2, 0.5, 200);
    c.is_true("repeated runs reproduce the identical estimate",
              a.hits == b.hits && a.p_hat == b.p_hat &&
                  a.ci_low == b.ci_low && a.ci_high == b.ci_high);
    c.is_true("confidence interval brackets p_hat",
              a.ci_low <= a.p_hat && a.p_hat <= a.ci_high);
    c.is_true("realized r is floor(rhobar n)", a.r == 8 && a.n == 40);
  }

  {
    const DeviationEstimate far =
        mc_deviation({EnsembleKind::gaussian, 99}, 20, 0.25, 100.0, 50);
    c.is_true("a huge deviation level yields zero hits",
              far.hits == 0 && far.p_hat == 0.0);
    c.is_true("the far-tail ds bound is non-vacuous", !far.theory_vacuous);
    const DeviationEstimate near =
        mc_deviation({EnsembleKind::gaussian, 99}, 10, 0.2, 0.01, 10);
    c.is_true("a tiny deviation level gives a vacuous ds bound",
              near.theory_bound.has_value() && near.theory_vacuous &&
                  *near.theory_bound >= 1.0);
    const DeviationEstimate lr = mc_deviation(
        {EnsembleKind::gaussian, 99}, 20, 0.25, 0.5, 20, Tail::largest,
        RateModel::lr(), Route::singular);
    c.is_true("non-ds models carry an exponent but no probability bound",
              !lr.theory_bound.has_value() &&
                  lr.theory_exponent == 20.0 * rate_lr(0.25, 0.5, 1.0));
  }

  {
    uint64_t prev = std::numeric_limits<uint64_t>::max();
    bool mono = true;
    for (const double t : {0.05, 0.1, 0.2, 0.4}) {
      const DeviationEstimate e =
          mc_deviation({EnsembleKind::gaussian, 321}, 30, 0.2, t, 300);
      if (e.hits > prev) mono = false;
      prev = e.hits;
    }
    c.is_true("p_hat is nonincreasing in t on the same sample set", mono);
  }

  {
    const DeviationEstimate quick = mc_deviation(
        {EnsembleKind::gaussian, 20240815}, 200, 0.1, 0.15, 500,
        Tail::either, RateModel::ds(), Route::singular);
    c.close_rel("ds either-tail bound equals 2 exp(-n t^2 / 2)",
                quick.theory_bound.value_or(-1.0),
                0.2107984491237286735664354, 1e-12);
    const double se = std::sqrt(
        std::max(quick.p_hat * (1.0 - quick.p_hat), 1e-12) / 500.0);
    c.is_true("empirical tail stays below the ds bound plus 3 SE",
              quick.p_hat <= *quick.theory_bound + 3.0 * se,
              "p_hat=" + fmt(quick.p_hat) +
                  " bound=" + fmt(*quick.theory_bound));
    c.is_true("exponent field carries n W(rhobar, t)",
              std::abs(quick.theory_exponent - 2.25) <= 1e-12);
  }

  {
    const DeviationEstimate eig = mc_deviation(
        {EnsembleKind::gaussian, 55}, 50, 0.2, 0.3, 100, Tail::either,
        RateModel::ds(), Route::eigen);
    c.is_true("eigen-route estimate is well-formed",
              eig.hits <= eig.trials && eig.ci_low <= eig.ci_high &&
                  !eig.theory_bound.has_value());
    const DeviationEstimate rad = mc_deviation(
        {EnsembleKind::rademacher, 3}, 40, 0.25, 0.3, 100);
    const DeviationEstimate rad2 = mc_deviation(
        {EnsembleKind::rademacher, 3}, 40, 0.25, 0.3, 100);
    c.is_true("rademacher estimates reproduce bit-identically",
              rad.hits == rad2.hits && rad.p_hat == rad2.p_hat);
  }

  {
    std::vector<double> lmax(101);
    parallel_for_index(101, [&](uint64_t i) {
      const Eigen::MatrixXd x = sample_matrix(
          {EnsembleKind::gaussian, derive_stream(90210, i)}, 100, 400);
      const Eigen::MatrixXd cov = (x * x.transpose()) / 400.0;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
          cov, Eigen::EigenvaluesOnly);
      lmax[i] = es.eigenvalues()(99);
    });
    std::sort(lmax.begin(), lmax.end());
    const double median = lmax[50];
    const double slack = 5.0 * std::pow(400.0, -2.0 / 3.0);
    c.is_true("median largest eigenvalue sits within 5 n^{-2/3} of the edge",
              std::abs(median - mp_edges(0.25).upper) <= slack,
              "median=" + fmt(median) + " edge=2.25 slack=" + fmt(slack));
  }

  c.throws<std::domain_error>("floor(rhobar n) = 0 is rejected", [] {
    return mc_deviation({EnsembleKind::gaussian, 1}, 10, 0.05, 0.1, 5);
  });
  c.throws<std::domain_error>("zero trials are rejected", [] {
    return mc_deviation({EnsembleKind::gaussian, 1}, 10, 0.5, 0.1, 0);
  });
  c.throws<std::domain_error>("t = 0 is rejected", [] {
    return mc_deviation({EnsembleKind::gaussian, 1}, 10, 0.5, 0.0, 5);
  });
  return c.take();
}

// ------------------------------------------------------------ empirical-ric

SuiteResult suite_empirical_ric() {
  Checker c("empirical-ric");

  {
    const Ensemble ens{EnsembleKind::gaussian, 21};
    const EmpiricalRic full = empirical_ric(ens, 8, 5, 5);
    c.is_true("r = p evaluates exactly one support",
              full.subsets_evaluated == 1 && full.exhaustive);
    const Eigen::MatrixXd m = sample_matrix(ens, 8, 5) / std::sqrt(8.0);
    const EigPair gram = extreme_eigs(m.transpose() * m);
    c.is_true("r = p constants come from the full Gram spectrum",
              std::abs(full.c_min_hat -
                       std::max(0.0, 1.0 - gram.lambda_min)) <= 1e-14 &&
                  std::abs(full.c_max_hat -
                           std::max(0.0, gram.lambda_max - 1.0)) <= 1e-14);
  }

  {
    const Eigen::MatrixXd a =
        sample_matrix({EnsembleKind::gaussian, 13}, 8, 4);
    const Eigen::HouseholderQR<Eigen::MatrixXd> qr(a);
    const Eigen::MatrixXd q =
        qr.householderQ() * Eigen::MatrixXd::Identity(8, 4);
    bool iso = true;
    for (const uint64_t r : {uint64_t{1}, uint64_t{2}, uint64_t{4}}) {
      const EmpiricalRic e = empirical_ric_of_matrix(q, r);
      if (e.c_min_hat > 1e-10 || e.c_max_hat > 1e-10) iso = false;
    }
    c.is_true("orthonormal columns give vanishing empirical constants", iso);
  }

  {
    const Ensemble ens{EnsembleKind::gaussian, 2024};
    const EmpiricalRic ex = empirical_ric(ens, 16, 20, 2);
    c.is_true("exhaustive scan covers all C(20,2) = 190 supports",
              ex.subsets_evaluated == 190 && ex.exhaustive);
    const EmpiricalRic sam =
        empirical_ric(ens, 16, 20, 2, RicSampleMode::sampled(190));
    c.is_true("sampled mode is flagged as a lower bound",
              !sam.exhaustive && sam.subsets_evaluated == 190);
    c.is_true("sampled constants never exceed the exhaustive ones",
              sam.c_min_hat <= ex.c_min_hat + 1e-15 &&
                  sam.c_max_hat <= ex.c_max_hat + 1e-15,
              "sampled=(" + fmt(sam.c_min_hat) + "," + fmt(sam.c_max_hat) +
                  ") exhaustive=(" + fmt(ex.c_min_hat) + "," +
                  fmt(ex.c_max_hat) + ")");
    const EmpiricalRic ex2 = empirical_ric(ens, 16, 20, 2);
    c.is_true("exhaustive scan reproduces bit-identically",
              ex.c_min_hat == ex2.c_min_hat && ex.c_max_hat == ex2.c_max_hat);
    const RicPair pair = ric_pair(ex);
    c.is_true("ric_pair forwards the empirical constants",
              pair.c_min == ex.c_min_hat && pair.c_max == ex.c_max_hat);
  }

  {
    const Eigen::MatrixXd m =
        sample_matrix({EnsembleKind::gaussian, 31}, 6, 6) / std::sqrt(6.0);
    double mn = std::numeric_limits<double>::infinity();
    double mx = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 6; ++i) {
      for (int j = i + 1; j < 6; ++j) {
        for (int k = j + 1; k < 6; ++k) {
          Eigen::MatrixXd cols(6, 3);
          cols.col(0) = m.col(i);
          cols.col(1) = m.col(j);
          cols.col(2) = m.col(k);
          const EigPair e = extreme_eigs(cols.transpose() * cols);
          mn = std::min(mn, e.lambda_min);
          mx = std::max(mx, e.lambda_max);
        }
      }
    }
    const EmpiricalRic lib = empirical_ric_of_matrix(m, 3);
    c.is_true("library scan equals a hand-rolled support enumeration",
              std::abs(lib.c_min_hat - std::max(0.0, 1.0 - mn)) <= 1e-14 &&
                  std::abs(lib.c_max_hat - std::max(0.0, mx - 1.0)) <= 1e-14 &&
                  lib.subsets_evaluated == 20);

    const EmpiricalRic sm =
        empirical_ric_of_matrix(m, 3, RicSampleMode::sampled(50), 9);
    c.is_true("exhaustive dominates a sampled run on the same matrix",
              sm.c_min_hat <= lib.c_min_hat + 1e-15 &&
                  sm.c_max_hat <= lib.c_max_hat + 1e-15);
  }

  c.throws<budget_error>("the exhaustive budget rejects C(40,20)", [] {
    return empirical_ric({EnsembleKind::gaussian, 1}, 4, 40, 20);
  });
  c.throws<std::domain_error>("r = 0 is rejected", [] {
    return empirical_ric({EnsembleKind::gaussian, 1}, 4, 6, 0);
  });
  c.throws<std::domain_error>("r > p is rejected", [] {
    return empirical_ric({EnsembleKind::gaussian, 1}, 4, 6, 7);
  });
  c.throws<std::domain_error>("sampled mode requires k >= 1", [] {
    return empirical_ric({EnsembleKind::gaussian, 1}, 4, 6, 2,
                         RicSampleMode::sampled(0));
  });
  return c.take();
}

// ------------------------------------------------------------------ sigma-s

SuiteResult suite_sigma_s() {
  Checker c("sigma-s");
  Eigen::VectorXd x(3);
  x << 3.0, -1.0, 2.0;
  c.close_abs("sigma_1(3, -1, 2) = 3", sigma_s(x, 1), 3.0, 1e-15);
  c.is_true("sigma_p is exactly 0", sigma_s(x, 3) == 0.0);

  Eigen::VectorXd ties(4);
  ties << 1.0, 1.0, 1.0, -1.0;
  c.close_abs("ties are value-invariant", sigma_s(ties, 2), 2.0, 1e-15);

  double max_err = 0.0;
  for (int i = 0; i < 40; ++i) {
    const int dim = 1 + (i % 12);
    Rng rng(derive_stream(700, i));
    Eigen::VectorXd v(dim);
    for (int j = 0; j < dim; ++j) v(j) = rng.gaussian();
    const auto s = static_cast<uint64_t>(i) % (static_cast<uint64_t>(dim) + 1);
    max_err = std::max(max_err, std::abs(sigma_s(v, s) -
                                         sigma_s_bruteforce_oracle(v, s)));
  }
  c.is_true("sigma_s equals the exhaustive-support oracle (dims <= 12)",
            max_err <= 1e-12, "max abs err = " + fmt(max_err));

  c.throws<std::domain_error>("s > dim is rejected",
                              [&] { return sigma_s(x, 4); });
  return c.take();
}

// ----------------------------------------------------------------- l1-solve

SuiteResult suite_l1_solve() {
  Checker c("l1-solve");

  {
    RecoveryInstance inst;
    inst.matrix = Eigen::MatrixXd::Identity(5, 5);
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(5);
    x0(1) = 2.0;
    x0(3) = -1.0;
    inst.y = x0;
    inst.eta = 0.0;
    const RecoveryResult res = l1_solve(inst);
    c.is_true("identity instance recovers x0",
              (res.x_hat - x0).lpNorm<Eigen::Infinity>() <= 1e-8 &&
                  res.status == SolveStatus::ok);
    c.close_abs("identity objective equals |x0|_1", res.objective, 3.0,
                1e-9);
    c.is_true("identity optimality gap is tight", res.optimality_gap <= 1e-6,
              fmt(res.optimality_gap));
  }

  {
    RecoveryInstance inst;
    inst.matrix = sample_matrix({EnsembleKind::gaussian, 41}, 4, 6);
    inst.y = Eigen::VectorXd::Zero(4);
    inst.eta = 0.0;
    const RecoveryResult res = l1_solve(inst);
    c.is_true("y = 0 returns the zero vector",
              res.x_hat.isZero(0.0) && res.objective == 0.0);
    inst.y = Eigen::VectorXd::Constant(4, 0.1);
    inst.eta = 1.0;
    const RecoveryResult wide = l1_solve(inst);
    c.is_true("eta >= |y| returns the zero vector", wide.x_hat.isZero(0.0));
  }

  {
    double max_obj_err = 0.0, max_feas = 0.0, max_gap_violation = 0.0;
    double max_gap = 0.0;
    bool all_ok = true;
    for (int i = 0; i < 20; ++i) {
      const int n = 3 + (i % 4);
      const int p = n + 2 + (i % 4);
      const Eigen::MatrixXd m =
          sample_matrix({EnsembleKind::gaussian,
                         derive_stream(860000, 2 * static_cast<uint64_t>(i))},
                        static_cast<uint64_t>(n), static_cast<uint64_t>(p)) /
          std::sqrt(static_cast<double>(n));
      Rng rng(derive_stream(860000, 2 * static_cast<uint64_t>(i) + 1));
      Eigen::VectorXd x0 = Eigen::VectorXd::Zero(p);
      for (const int idx : rng.sample_indices(p, 1 + (i % 2))) {
        x0(idx) = rng.gaussian();
      }
      RecoveryInstance inst;
      inst.matrix = m;
      inst.y = m * x0;
      inst.eta = 0.0;
      const RecoveryResult res = l1_solve(inst);
      const double opt = l1_vertex_optimum_oracle(m, inst.y);
      max_obj_err = std::max(max_obj_err, std::abs(res.objective - opt));
      max_feas = std::max(max_feas, res.feasibility_residual);
      max_gap_violation =
          std::max(max_gap_violation,
                   (res.objective - opt) - res.optimality_gap);
      max_gap = std::max(max_gap, res.optimality_gap);
      if (res.status != SolveStatus::ok) all_ok = false;
    }
    c.is_true("objective matches the vertex oracle on 20 seeded instances",
              max_obj_err <= 1e-6, "max |obj - opt| = " + fmt(max_obj_err));
    c.is_true("every feasibility residual is below 1e-8", max_feas <= 1e-8,
              "max residual = " + fmt(max_feas));
    c.is_true("the dual certificate upper-bounds the true optimality gap",
              max_gap_violation <= 1e-9,
              "max violation = " + fmt(max_gap_violation));
    c.is_true("certified gaps stay within the optimality tolerance",
              max_gap <= 1e-6, "max gap = " + fmt(max_gap));
    c.is_true("all 20 instances converge", all_ok);
  }

  {
    const Eigen::MatrixXd m =
        sample_matrix({EnsembleKind::gaussian, 424243}, 5, 9) /
        std::sqrt(5.0);
    Rng rng(424244);
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(9);
    x0(2) = 1.3;
    x0(7) = -0.4;
    Eigen::VectorXd e(5);
    for (int i = 0; i < 5; ++i) e(i) = rng.gaussian();
    e *= 0.09 / e.norm();
    RecoveryInstance inst;
    inst.matrix = m;
    inst.y = m * x0 + e;
    inst.eta = 0.1;
    const RecoveryResult res = l1_solve(inst);
    c.is_true("noisy instance stays feasible",
              res.feasibility_residual <= 1e-8 &&
                  res.status == SolveStatus::ok);
    RecoveryInstance scaled = inst;
    scaled.y *= 3.0;
    scaled.eta *= 3.0;
    const RecoveryResult res3 = l1_solve(scaled);
    const double hom =
        (res3.x_hat - 3.0 * res.x_hat).lpNorm<Eigen::Infinity>();
    c.is_true("scaling (y, eta) by 3 scales the solution by 3", hom <= 1e-5,
              "max abs deviation = " + fmt(hom));
  }

  {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(3, 2);
    m(0, 0) = 1.0;
    m(1, 1) = 1.0;
    Eigen::VectorXd y(3);
    y << 0.0, 0.0, 1.0;
    const RecoveryResult res = l1_solve({m, y, 0.0, {}, {}});
    c.is_true("unreachable y is reported infeasible",
              res.status == SolveStatus::infeasible &&
                  res.feasibility_residual >= 0.9 &&
                  std::isinf(res.optimality_gap));
  }

  {
    const Eigen::MatrixXd m =
        sample_matrix({EnsembleKind::gaussian, 51}, 4, 8) / 2.0;
    Rng rng(52);
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(8);
    x0(1) = rng.gaussian();
    x0(5) = rng.gaussian();
    SolverOptions opt;
    opt.max_iter = 3;
    const RecoveryResult res = l1_solve({m, m * x0, 0.0, {}, {}}, opt);
    c.is_true("an exhausted iteration budget is reported",
              res.status == SolveStatus::max_iter && res.iterations == 3);
  }

  {
    Eigen::VectorXd x0 = Eigen::VectorXd::Zero(4);
    x0(0) = 1.0;
    const SrsrRatios same = srsr_errors(x0, x0, 1, 0.0);
    c.is_true("identical vectors flag exact recovery",
              same.exact_recovery && same.r1 == 0.0 && same.r2 == 0.0 &&
                  !same.unbounded);
    Eigen::VectorXd xh = x0;
    xh(2) = 0.5;
    const SrsrRatios off = srsr_errors(x0, xh, 1, 0.0);
    c.is_true("sparse x0 with eta = 0 and a miss is flagged unbounded",
              off.unbounded && std::isinf(off.r1) && std::isinf(off.r2));

    Eigen::VectorXd comp(4);
    comp << 1.0, 0.5, 0.25, 0.125;
    Eigen::VectorXd est = comp;
    est(0) += 0.1;
    const SrsrRatios fin = srsr_errors(comp, est, 2, 0.1);
    const double den1 = 0.25 + 0.125 + std::sqrt(2.0) * 0.1;
    const double den2 = (0.25 + 0.125) / std::sqrt(2.0) + 0.1;
    c.close_rel("compressible r1 matches direct arithmetic", fin.r1,
                0.1 / den1, 1e-12);
    c.close_rel("compressible r2 matches direct arithmetic", fin.r2,
                0.1 / den2, 1e-12);
    c.throws<std::domain_error>("s = 0 is rejected",
                                [&] { return srsr_errors(x0, x0, 0, 0.0); });
    const Eigen::VectorXd mismatched = Eigen::VectorXd::Zero(3);
    c.throws<std::invalid_argument>(
        "dimension mismatch is rejected",
        [&] { return srsr_errors(x0, mismatched, 1, 0.0); });
  }
  return c.take();
}

// --------------------------------------------------------------------- srsr

SuiteResult suite_srsr() {
  Checker c("srsr");

  {
    SrsrExperimentConfig cfg;
    cfg.seed = 1;
    cfg.n = 8;
    cfg.p = 8;
    cfg.s = 2;
    cfg.eta = 0.0;
    cfg.trials = 5;
    cfg.ric_precheck = true;
    cfg.fixed_matrix = Eigen::MatrixXd::Identity(8, 8);
    const SrsrExperimentSummary sum = srsr_experiment(cfg);
    c.is_true("identity sensing recovers every trial exactly",
              sum.success_rate == 1.0 && sum.exact_recoveries == 5);
    c.is_true("the RIC precheck is skipped for a fixed matrix",
              sum.ric_checked_trials == 0);
  }

  {
    SrsrExperimentConfig cfg;
    cfg.kind = EnsembleKind::gaussian;
    cfg.seed = 11;
    cfg.n = 12;
    cfg.p = 16;
    cfg.s = 1;
    cfg.eta = 0.0;
    cfg.trials = 8;
    cfg.ric_precheck = true;
    const SrsrExperimentSummary a = srsr_experiment(cfg);
    const SrsrExperimentSummary b = srsr_experiment(cfg);
    bool identical = a.exact_recoveries == b.exact_recoveries &&
                     a.implication_holds == b.implication_holds &&
                     a.ric_pass_trials == b.ric_pass_trials;
    for (uint64_t i = 0; i < cfg.trials; ++i) {
      const SrsrTrial& ta = a.trial_records[i];
      const SrsrTrial& tb = b.trial_records[i];
      if (ta.exact_recovery != tb.exact_recovery ||
          ta.err_l2 != tb.err_l2 || ta.objective != tb.objective ||
          ta.gamma != tb.gamma || ta.iterations != tb.iterations) {
        identical = false;
      }
    }
    c.is_true("the full experiment reproduces bit-identically", identical);
    c.is_true("every trial runs the exhaustive RIC precheck",
              a.ric_checked_trials == 8);
    c.is_true("the recovery implication holds on the seeded batch",
              a.implication_holds);
    c.is_true("eta = 0 ratio accounting partitions the trials",
              a.unbounded_ratio_trials == a.trials - a.exact_recoveries);
    bool feas = true;
    for (const SrsrTrial& t : a.trial_records) {
      if (t.feasibility_residual > 1e-8 || t.status != SolveStatus::ok) {
        feas = false;
      }
    }
    c.is_true("every trial is feasible and converged", feas);
  }

  {
    SrsrExperimentConfig cfg;
    cfg.kind = EnsembleKind::gaussian;
    cfg.seed = 5;
    cfg.n = 10;
    cfg.p = 14;
    cfg.s = 1;
    cfg.eta = 0.05;
    cfg.noise_level = 0.2;
    cfg.trials = 4;
    const SrsrExperimentSummary sum = srsr_experiment(cfg);
    c.is_true("oversized noise draws are rescaled and counted",
              sum.rescaled_noise_trials >= 1,
              std::to_string(sum.rescaled_noise_trials) + " of 4");
    bool feas = true;
    for (const SrsrTrial& t : sum.trial_records) {
      if (t.feasibility_residual > 1e-8) feas = false;
      if (t.status == SolveStatus::infeasible) feas = false;
    }
    c.is_true("noisy trials stay inside the eta ball", feas);
  }

  c.throws<std::domain_error>("s = 0 is rejected", [] {
    SrsrExperimentConfig cfg;
    cfg.n = 4;
    cfg.p = 6;
    cfg.s = 0;
    return srsr_experiment(cfg);
  });
  c.throws<std::domain_error>("zero trials are rejected", [] {
    SrsrExperimentConfig cfg;
    cfg.n = 4;
    cfg.p = 6;
    cfg.s = 1;
    cfg.trials = 0;
    return srsr_experiment(cfg);
  });
  c.throws<std::invalid_argument>("a mis-sized fixed matrix is rejected", [] {
    SrsrExperimentConfig cfg;
    cfg.n = 4;
    cfg.p = 6;
    cfg.s = 1;
    cfg.fixed_matrix = Eigen::MatrixXd::Identity(3, 3);
    return srsr_experiment(cfg);
  });
  return c.take();
}

using SuiteFn = SuiteResult (*)();

struct Entry {
  const char* name;
  SuiteFn fn;
};

constexpr Entry kSuites[] = {
    {"constants", &suite_constants},   {"entropy", &suite_entropy},
    {"logbinom", &suite_logbinom},     {"envelope", &suite_envelope},
    {"stirling", &suite_stirling},     {"borned1", &suite_borned1},
    {"ratefn", &suite_ratefn},         {"ricbounds", &suite_ricbounds},
    {"fsconsts", &suite_fsconsts},     {"eig-oracle", &suite_eig_oracle},
    {"mc-dev", &suite_mc_dev},         {"empirical-ric", &suite_empirical_ric},
    {"sigma-s", &suite_sigma_s},       {"l1-solve", &suite_l1_solve},
    {"srsr", &suite_srsr},
};

}  // namespace

SuiteResult constants_suite_with(const UniversalConstants& u) {
  Checker c("constants");
  const double s41 = std::sqrt(41.0);
  c.close_abs("rho0 equals (33 - 5 sqrt(41))/16", u.rho0,
              (33.0 - 5.0 * s41) / 16.0, 5e-15);
  c.close_abs("rho0 matches the 50-digit reference", u.rho0,
              0.06152367580223478547243198, 5e-15);
  c.is_true("rho0 rounds to the printed 0.0615",
            std::abs(u.rho0 - 0.0615) <= 5e-5, fmt(u.rho0));
  c.close_abs("tau0 equals 4/sqrt(41)", u.tau0, 4.0 / s41, 5e-15);
  c.close_abs("tau0 matches the 50-digit reference", u.tau0,
              0.6246950475544242620964115, 5e-15);
  c.is_true("tau0 rounds to the printed 0.6247",
            std::abs(u.tau0 - 0.6247) <= 5e-5, fmt(u.tau0));
  c.close_abs("gamma0 equals (4 + sqrt(41))^2/25", u.gamma0,
              (4.0 + s41) * (4.0 + s41) / 25.0, 5e-14);
  c.close_abs("gamma0 matches the 50-digit reference", u.gamma0,
              4.32899975597851157967623, 5e-14);
  c.is_true("gamma0 rounds to the printed 4.329",
            std::abs(u.gamma0 - 4.329) <= 5e-4, fmt(u.gamma0));
  c.close_rel("(1 + tau0)/(1 - tau0) equals gamma0",
              (1.0 + u.tau0) / (1.0 - u.tau0), u.gamma0, 1e-12);
  c.is_true("sqrt(2 rho0) lies in (0.35077, 0.35079)",
            std::sqrt(2.0 * u.rho0) > 0.35077 &&
                std::sqrt(2.0 * u.rho0) < 0.35079,
            fmt(std::sqrt(2.0 * u.rho0)));
  c.close_abs("2 rho0 equals (33 - 5 sqrt(41))/8", 2.0 * u.rho0,
              (33.0 - 5.0 * s41) / 8.0, 1e-14);
  return c.take();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const Entry& e : kSuites) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

SuiteResult run_suite(const std::string& name) {
  for (const Entry& e : kSuites) {
    if (name == e.name) return e.fn();
  }
  throw std::invalid_argument("unknown self-test suite: " + name);
}

std::vector<SuiteResult> run_all() {
  std::vector<SuiteResult> out;
  out.reserve(std::size(kSuites));
  for (const Entry& e : kSuites) out.push_back(e.fn());
  return out;
}

}  // namespace riclab::selftest
