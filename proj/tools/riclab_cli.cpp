/**
 * @brief Command-line front end: deterministic JSON/CSV emission of the
 * closed-form bound evaluators, phase curves, seeded Monte Carlo deviation
 * estimates, exhaustive empirical RIC scans, l1 recovery experiments, the
 * Rademacher constant chain, and the oracle self-test suites.
 *
 * Exit codes: 0 success, 1 self-test failure, 2 usage or domain error,
 * 3 resource budget exceeded.
 */

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "riclab/riclab.hpp"
#include "suites.hpp"

namespace {

using nlohmann::json;

/// Work estimate cap for mc-dev so that an accidental huge request fails
/// fast with exit 3 instead of running for hours.
constexpr double kMcDevBudget = 2e12;

/// Shortest decimal string that round-trips to the exact double.
[[nodiscard]] std::string shortest(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return {buf, res.ptr};
}

[[nodiscard]] riclab::RateKind parse_kind(const std::string& s) {
  if (s == "tw") return riclab::RateKind::tw;
  if (s == "ds") return riclab::RateKind::ds;
  if (s == "lr") return riclab::RateKind::lr;
  if (s == "fs") return riclab::RateKind::fs;
  throw std::domain_error("unknown model kind: " + s);
}

[[nodiscard]] riclab::Route parse_route(const std::string& s) {
  if (s == "eigen") return riclab::Route::eigen;
  if (s == "singular") return riclab::Route::singular;
  throw std::domain_error("unknown route: " + s);
}

[[nodiscard]] riclab::Tail parse_tail(const std::string& s) {
  if (s == "largest") return riclab::Tail::largest;
  if (s == "smallest") return riclab::Tail::smallest;
  if (s == "either") return riclab::Tail::either;
  throw std::domain_error("unknown tail: " + s);
}

[[nodiscard]] riclab::EnsembleKind parse_ensemble(const std::string& s) {
  if (s == "gaussian") return riclab::EnsembleKind::gaussian;
  if (s == "rademacher") return riclab::EnsembleKind::rademacher;
  throw std::domain_error("unknown ensemble: " + s);
}

[[nodiscard]] json model_json(const riclab::RateModel& m) {
  return {{"kind", riclab::to_string(m.kind)},
          {"c_tw", m.c_tw},
          {"c_lr", m.c_lr},
          {"c_fs", m.c_fs}};
}

/// Shared --model/--route/--c-* flags; build() applies the constants to the
/// selected kind and warns when the lr placeholder default is relied upon.
struct ModelFlags {
  std::string kind = "ds";
  std::string route = "singular";
  double c_tw = 1.0;
  double c_lr = 1.0;
  double c_fs = 837.0;
  CLI::Option* c_lr_opt = nullptr;

  void add_to(CLI::App& sub, bool with_route = true) {
    sub.add_option("--model", kind, "rate model: tw, ds, lr, fs")
        ->check(CLI::IsMember({"tw", "ds", "lr", "fs"}))
        ->capture_default_str();
    if (with_route) {
      sub.add_option("--route", route, "spectral route: eigen or singular")
          ->check(CLI::IsMember({"eigen", "singular"}))
          ->capture_default_str();
    }
    sub.add_option("--c-tw", c_tw, "tw rate constant")->capture_default_str();
    c_lr_opt = sub.add_option("--c-lr", c_lr, "lr rate constant (no proven value)")
                   ->capture_default_str();
    sub.add_option("--c-fs", c_fs, "fs rate constant")->capture_default_str();
  }

  [[nodiscard]] riclab::RateModel build() const {
    riclab::RateModel m;
    m.kind = parse_kind(kind);
    m.c_tw = c_tw;
    m.c_lr = c_lr;
    m.c_fs = c_fs;
    if (m.kind == riclab::RateKind::lr && c_lr_opt != nullptr &&
        c_lr_opt->count() == 0) {
      std::cerr << "warning: the lr constant has no proven value; using the "
                   "placeholder default c_lr=1 (pass --c-lr to override)\n";
    }
    return m;
  }
};

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << text;
}

[[nodiscard]] std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

// ------------------------------------------------------------------ bounds

int cmd_bounds(const ModelFlags& mf, double delta, double rhobar, bool force,
               const std::string& output) {
  const riclab::RateModel model = mf.build();
  const riclab::GrowthPoint point(delta, rhobar);
  if (!point.within_theorem_budget() && !force) {
    std::cerr << "error: rhobar = " << shortest(rhobar)
              << " exceeds the proved range rhobar < 2*rho0 = "
              << shortest(2.0 * riclab::rho_zero())
              << " (pass --force to evaluate anyway, marked inadmissible)\n";
    return 2;
  }
  const riclab::Route route = parse_route(mf.route);
  const auto report = route == riclab::Route::eigen
                          ? riclab::psi_bounds_eigen(model, point)
                          : riclab::psi_bounds_singular(model, point);
  if (!report) {
    std::cerr << "error: the uniform deviation level t0 is undefined at this "
                 "point for the selected model\n";
    return 2;
  }
  const json j = {{"model", model_json(model)},
                  {"route", riclab::to_string(report->route)},
                  {"delta", delta},
                  {"rhobar", rhobar},
                  {"t0", report->t0},
                  {"psi_min", report->psi_min},
                  {"psi_max", report->psi_max},
                  {"admissible", report->admissible()}};
  emit(dump_json(j), output);
  return 0;
}

// ------------------------------------------------------------- phase-curve

int cmd_phase_curve(const ModelFlags& mf, double rho_min, double rho_max,
                    uint64_t points, const std::string& output) {
  const riclab::RateModel model = mf.build();
  const riclab::Route route = parse_route(mf.route);
  const double rho0 = riclab::rho_zero();
  if (points == 0) {
    std::cerr << "error: --points must be >= 1\n";
    return 2;
  }
  if (!(rho_min > 0.0 && rho_max < rho0 && rho_min <= rho_max)) {
    std::cerr << "error: need 0 < rho-min <= rho-max < rho0 = "
              << shortest(rho0) << '\n';
    return 2;
  }
  if (points > 1 && rho_min == rho_max) {
    std::cerr << "error: a multi-point grid needs rho-min < rho-max\n";
    return 2;
  }
  if (points > 10'000'000) {
    throw riclab::budget_error("phase-curve: more than 1e7 grid points");
  }

  std::string text;
  text += "# schema=1\n";
  text += "# command=phase-curve\n";
  text += "# model=" + std::string(riclab::to_string(model.kind)) + "\n";
  text += "# c_tw=" + shortest(model.c_tw) + "\n";
  text += "# c_lr=" + shortest(model.c_lr) + "\n";
  text += "# c_fs=" + shortest(model.c_fs) + "\n";
  text += "# route=" + std::string(riclab::to_string(route)) + "\n";
  text += "# rho_min=" + shortest(rho_min) + "\n";
  text += "# rho_max=" + shortest(rho_max) + "\n";
  text += "# points=" + std::to_string(points) + "\n";
  text += "rho,delta_threshold,admissible\n";

  const double log_lo = std::log(rho_min);
  const double log_hi = std::log(rho_max);
  for (uint64_t i = 0; i < points; ++i) {
    double rho;
    if (i == 0) {
      rho = rho_min;
    } else if (i == points - 1) {
      rho = rho_max;
    } else {
      const double f =
          static_cast<double>(i) / static_cast<double>(points - 1);
      rho = std::exp(log_lo + f * (log_hi - log_lo));
    }
    const double threshold = riclab::psi0(route, rho, model);
    const bool admissible = threshold < 1.0;
    text += shortest(rho);
    text += ',';
    text += shortest(threshold);
    text += ',';
    text += admissible ? '1' : '0';
    text += '\n';
  }
  emit(text, output);
  return 0;
}

// ------------------------------------------------------------------ mc-dev

int cmd_mc_dev(const ModelFlags& mf, const std::string& ensemble,
               uint64_t seed, uint64_t n, double rhobar, double t,
               uint64_t trials, const std::string& tail, bool check_fs_domain,
               const std::string& output) {
  const riclab::RateModel model = mf.build();
  const riclab::EnsembleKind kind = parse_ensemble(ensemble);
  const riclab::Route route = parse_route(mf.route);
  const riclab::Tail tail_kind = parse_tail(tail);

  const auto r = static_cast<uint64_t>(
      std::floor(rhobar * static_cast<double>(n) + 1e-9));
  if (check_fs_domain && kind == riclab::EnsembleKind::rademacher && r < 54) {
    std::cerr << "error: the Rademacher tail bound requires at least 54 rows "
                 "(got r = "
              << r << "); raise n or rhobar, or drop --check-fs-domain\n";
    return 2;
  }
  const double rd = static_cast<double>(r);
  const double nd = static_cast<double>(n);
  const double work = static_cast<double>(trials) * (rd * rd * nd + rd * rd * rd);
  if (work > kMcDevBudget) {
    throw riclab::budget_error(
        "mc-dev: requested work exceeds the runtime budget; lower --trials "
        "or the matrix size");
  }

  const riclab::DeviationEstimate est = riclab::mc_deviation(
      {kind, seed}, n, rhobar, t, trials, tail_kind, model, route);

  const json config = {{"command", "mc-dev"},
                       {"ensemble", riclab::to_string(kind)},
                       {"seed", seed},
                       {"n", n},
                       {"rhobar", rhobar},
                       {"t", t},
                       {"trials", trials},
                       {"tail", tail},
                       {"route", riclab::to_string(route)},
                       {"model", model_json(model)},
                       {"check_fs_domain", check_fs_domain}};
  json estimate = {{"trials", est.trials},
                   {"hits", est.hits},
                   {"p_hat", est.p_hat},
                   {"ci_low", est.ci_low},
                   {"ci_high", est.ci_high},
                   {"theory_vacuous", est.theory_vacuous},
                   {"theory_exponent", est.theory_exponent},
                   {"t", est.t},
                   {"rhobar", est.rhobar},
                   {"n", est.n},
                   {"r", est.r},
                   {"tail", riclab::to_string(est.tail)},
                   {"route", riclab::to_string(est.route)},
                   {"model", model_json(est.model)}};
  estimate["theory_bound"] =
      est.theory_bound ? json(*est.theory_bound) : json(nullptr);
  emit(dump_json(json{{"config", config}, {"estimate", estimate}}), output);
  return 0;
}

// --------------------------------------------------------------- ric-exact

int cmd_ric_exact(const std::string& ensemble, uint64_t seed, uint64_t n,
                  uint64_t p, uint64_t r, uint64_t sampled,
                  const std::string& output) {
  const riclab::EnsembleKind kind = parse_ensemble(ensemble);
  const riclab::RicSampleMode mode = sampled == 0
                                         ? riclab::RicSampleMode::exhaustive()
                                         : riclab::RicSampleMode::sampled(sampled);
  const riclab::EmpiricalRic ric =
      riclab::empirical_ric({kind, seed}, n, p, r, mode);
  const riclab::RicPair pair = riclab::ric_pair(ric);
  const auto gamma = riclab::gamma_of(pair);
  const auto kappa = riclab::srsr_kappa(pair);

  const json config = {{"command", "ric-exact"},
                       {"ensemble", riclab::to_string(kind)},
                       {"seed", seed},
                       {"n", n},
                       {"p", p},
                       {"r", r},
                       {"sampled", sampled}};
  json result = {{"n", ric.n},
                 {"p", ric.p},
                 {"r", ric.r},
                 {"c_min_hat", ric.c_min_hat},
                 {"c_max_hat", ric.c_max_hat},
                 {"subsets_evaluated", ric.subsets_evaluated},
                 {"exhaustive", ric.exhaustive},
                 {"condition_holds", riclab::srsr_condition_holds(pair)}};
  result["gamma"] = gamma ? json(*gamma) : json(nullptr);
  result["kappa"] = kappa ? json(*kappa) : json(nullptr);
  emit(dump_json(json{{"config", config}, {"result", result}}), output);
  return 0;
}

// ----------------------------------------------------------------- recover

int cmd_recover(const std::string& ensemble, uint64_t seed, uint64_t n,
                uint64_t p, uint64_t s, double eta, double noise_level,
                uint64_t trials, bool ric_precheck, bool identity,
                uint64_t max_iter, bool per_trial,
                const std::string& output) {
  riclab::SrsrExperimentConfig cfg;
  cfg.kind = parse_ensemble(ensemble);
  cfg.seed = seed;
  cfg.n = n;
  cfg.p = p;
  cfg.s = s;
  cfg.eta = eta;
  cfg.noise_level = noise_level;
  cfg.trials = trials;
  cfg.ric_precheck = ric_precheck;
  cfg.solver.max_iter = max_iter;
  if (identity) {
    if (n != p) {
      std::cerr << "error: --identity requires n == p\n";
      return 2;
    }
    cfg.fixed_matrix =
        Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n),
                                  static_cast<Eigen::Index>(p));
  }

  const riclab::SrsrExperimentSummary sum = riclab::srsr_experiment(cfg);

  const json config = {{"command", "recover"},
                       {"ensemble", riclab::to_string(cfg.kind)},
                       {"seed", seed},
                       {"n", n},
                       {"p", p},
                       {"s", s},
                       {"eta", eta},
                       {"noise_level", noise_level},
                       {"trials", trials},
                       {"ric_precheck", ric_precheck},
                       {"identity", identity},
                       {"max_iter", max_iter}};
  json summary = {{"trials", sum.trials},
                  {"exact_recoveries", sum.exact_recoveries},
                  {"success_rate", sum.success_rate},
                  {"unbounded_ratio_trials", sum.unbounded_ratio_trials},
                  {"rescaled_noise_trials", sum.rescaled_noise_trials},
                  {"ric_checked_trials", sum.ric_checked_trials},
                  {"ric_pass_trials", sum.ric_pass_trials},
                  {"ric_pass_and_recovered", sum.ric_pass_and_recovered},
                  {"implication_holds", sum.implication_holds}};
  summary["max_r1"] = sum.max_r1 ? json(*sum.max_r1) : json(nullptr);
  summary["max_r2"] = sum.max_r2 ? json(*sum.max_r2) : json(nullptr);
  json root = {{"config", config}, {"summary", summary}};
  if (per_trial) {
    json arr = json::array();
    for (const riclab::SrsrTrial& rec : sum.trial_records) {
      json t = {{"exact_recovery", rec.exact_recovery},
                {"err_l1", rec.err_l1},
                {"err_l2", rec.err_l2},
                {"unbounded", rec.unbounded},
                {"noise_rescaled", rec.noise_rescaled},
                {"objective", rec.objective},
                {"feasibility_residual", rec.feasibility_residual},
                {"optimality_gap", rec.optimality_gap},
                {"iterations", rec.iterations},
                {"status", riclab::to_string(rec.status)}};
      t["r1"] = std::isfinite(rec.r1) ? json(rec.r1) : json(nullptr);
      t["r2"] = std::isfinite(rec.r2) ? json(rec.r2) : json(nullptr);
      t["gamma"] = rec.gamma ? json(*rec.gamma) : json(nullptr);
      t["ric_pass"] = rec.ric_pass ? json(*rec.ric_pass) : json(nullptr);
      arr.push_back(std::move(t));
    }
    root["trials"] = std::move(arr);
  }
  emit(dump_json(root), output);
  return 0;
}

// --------------------------------------------------------------- fs-consts

int cmd_fs_consts(std::optional<uint64_t> d1_s,
                  const std::vector<uint64_t>& path_args,
                  const std::vector<uint64_t>& trace_args,
                  const std::vector<double>& tail_args, double tail_c0,
                  const std::vector<double>& moderate_args,
                  const std::string& output) {
  const riclab::FsConstants k{};
  const riclab::ConstantChainReport chain = riclab::verify_constant_chain(k);

  json relations = json::array();
  for (const riclab::ConstantRelation& r : chain.relations) {
    relations.push_back({{"name", r.name},
                         {"stated", r.stated},
                         {"computed", r.computed},
                         {"rel_error", r.rel_error},
                         {"within_tol", r.within_tol},
                         {"expect_match", r.expect_match},
                         {"ok", r.ok()}});
  }
  json root = {{"config",
                {{"command", "fs-consts"},
                 {"constants",
                  {{"c0_d", k.c0_d},
                   {"c_d", k.c_d},
                   {"c0_sigma", k.c0_sigma},
                   {"c_sigma", k.c_sigma},
                   {"c0_rad", k.c0_rad},
                   {"c_rad", k.c_rad},
                   {"c_fs", k.c_fs},
                   {"v_rad", k.v_rad}}}}},
               {"chain", {{"all_ok", chain.all_ok}, {"relations", relations}}}};

  json evals = json::object();
  if (d1_s) {
    evals["d1_bound"] = {{"s", *d1_s},
                         {"log_value", riclab::d1_bound_log(*d1_s)},
                         {"value", riclab::d1_bound(*d1_s)}};
  }
  if (!path_args.empty()) {
    const double lv = riclab::path_bound(path_args[0], path_args[1], path_args[2]);
    evals["path_bound"] = {{"n", path_args[0]},
                           {"m_rows", path_args[1]},
                           {"n_cols", path_args[2]},
                           {"log_value", lv}};
  }
  if (!trace_args.empty()) {
    const double lv =
        riclab::trace_bound_delta(trace_args[0], trace_args[1], trace_args[2]);
    evals["trace_bound_delta"] = {{"m", trace_args[0]},
                                  {"m_rows", trace_args[1]},
                                  {"n_cols", trace_args[2]},
                                  {"log_value", lv}};
  }
  if (!tail_args.empty()) {
    const auto m_rows = static_cast<uint64_t>(tail_args[0]);
    const auto n_cols = static_cast<uint64_t>(tail_args[1]);
    const double eps = tail_args[2];
    const riclab::LogScaled tail =
        riclab::fs_tail_bound(m_rows, n_cols, eps, tail_c0);
    if (tail.log_value >= 0.0) {
      std::cerr << "warning: the tail bound is vacuous (>= 1) at these "
                   "parameters; note that c0 carries no pinned value\n";
    }
    evals["fs_tail_bound"] = {{"m_rows", m_rows},
                              {"n_cols", n_cols},
                              {"eps", eps},
                              {"c0", tail_c0},
                              {"log_value", tail.log_value},
                              {"value", tail.value()}};
  }
  if (!moderate_args.empty()) {
    const auto m_rows = static_cast<uint64_t>(moderate_args[0]);
    const auto n_cols = static_cast<uint64_t>(moderate_args[1]);
    const double eps = moderate_args[2];
    const double c_big = moderate_args[3];
    evals["fs_moderate_bound"] = {
        {"m_rows", m_rows},
        {"n_cols", n_cols},
        {"eps", eps},
        {"c_big", c_big},
        {"exponent", riclab::fs_moderate_bound(m_rows, n_cols, eps, c_big)}};
  }
  if (!evals.empty()) root["evaluations"] = std::move(evals);
  emit(dump_json(root), output);
  return 0;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(const std::string& suite, const std::string& output) {
  namespace st = riclab::selftest;
  std::vector<st::SuiteResult> results;
  if (suite.empty()) {
    results = st::run_all();
  } else {
    results.push_back(st::run_suite(suite));
  }

  std::string text;
  char line[160];
  std::snprintf(line, sizeof line, "%-16s %7s %7s  %s\n", "suite", "checks",
                "failed", "status");
  text += line;
  uint64_t total_checks = 0;
  uint64_t total_failed = 0;
  for (const st::SuiteResult& r : results) {
    total_checks += r.checks.size();
    total_failed += r.failed();
    std::snprintf(line, sizeof line, "%-16s %7zu %7llu  %s\n", r.suite.c_str(),
                  r.checks.size(),
                  static_cast<unsigned long long>(r.failed()),
                  r.pass() ? "pass" : "FAIL");
    text += line;
  }
  std::snprintf(line, sizeof line,
                "total: %zu suites, %llu checks, %llu failed\n",
                results.size(), static_cast<unsigned long long>(total_checks),
                static_cast<unsigned long long>(total_failed));
  text += line;
  for (const st::SuiteResult& r : results) {
    for (const st::Check& c : r.checks) {
      if (!c.pass) {
        text += "FAIL " + r.suite + ": " + c.name;
        if (!c.detail.empty()) text += " (" + c.detail + ")";
        text += '\n';
      }
    }
  }
  emit(text, output);
  return total_failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "riclab: closed-form restricted-isometry bounds, phase curves, and "
      "seeded empirical validation"};
  app.require_subcommand(1);

  // bounds
  auto* sb = app.add_subcommand(
      "bounds", "evaluate the (t0, psi_min, psi_max) bound at one point");
  ModelFlags mf_bounds;
  mf_bounds.add_to(*sb);
  double b_delta = 0.0, b_rhobar = 0.0;
  bool b_force = false;
  std::string b_output;
  sb->add_option("--delta", b_delta, "aspect ratio n/p in (0,1)")->required();
  sb->add_option("--rhobar", b_rhobar, "order ratio r/n in (0,1)")->required();
  sb->add_flag("--force", b_force,
               "evaluate outside the proved rhobar range (admissible=false)");
  sb->add_option("--output", b_output, "write to file instead of stdout");

  // phase-curve
  auto* sp = app.add_subcommand(
      "phase-curve", "CSV of the delta threshold curve on a log grid of rho");
  ModelFlags mf_curve;
  mf_curve.add_to(*sp);
  double p_rho_min = 1e-4, p_rho_max = 0.06;
  uint64_t p_points = 100;
  std::string p_output;
  sp->add_option("--rho-min", p_rho_min, "left end of the rho grid")
      ->capture_default_str();
  sp->add_option("--rho-max", p_rho_max, "right end of the rho grid")
      ->capture_default_str();
  sp->add_option("--points", p_points, "number of grid points")
      ->capture_default_str();
  sp->add_option("--output", p_output, "write to file instead of stdout");

  // mc-dev
  auto* sm = app.add_subcommand(
      "mc-dev", "seeded Monte Carlo estimate of a spectral deviation tail");
  ModelFlags mf_mc;
  mf_mc.add_to(*sm);
  std::string m_ensemble = "gaussian", m_tail = "either", m_output;
  uint64_t m_seed = 0, m_n = 0, m_trials = 1000;
  double m_rhobar = 0.0, m_t = 0.0;
  bool m_check_fs = false;
  sm->add_option("--ensemble", m_ensemble, "gaussian or rademacher")
      ->check(CLI::IsMember({"gaussian", "rademacher"}))
      ->capture_default_str();
  sm->add_option("--seed", m_seed, "master seed")->capture_default_str();
  sm->add_option("--n", m_n, "columns per trial matrix")->required();
  sm->add_option("--rhobar", m_rhobar, "row/column ratio in (0,1)")
      ->required();
  sm->add_option("--t", m_t, "deviation level")->required();
  sm->add_option("--trials", m_trials, "number of seeded trials")
      ->capture_default_str();
  sm->add_option("--tail", m_tail, "largest, smallest, or either")
      ->check(CLI::IsMember({"largest", "smallest", "either"}))
      ->capture_default_str();
  sm->add_flag("--check-fs-domain", m_check_fs,
               "require >= 54 rows for the Rademacher ensemble");
  sm->add_option("--output", m_output, "write to file instead of stdout");

  // ric-exact
  auto* sr = app.add_subcommand(
      "ric-exact", "empirical RIC of one seeded matrix over all supports");
  std::string r_ensemble = "gaussian", r_output;
  uint64_t r_seed = 0, r_n = 0, r_p = 0, r_r = 0, r_sampled = 0;
  sr->add_option("--ensemble", r_ensemble, "gaussian or rademacher")
      ->check(CLI::IsMember({"gaussian", "rademacher"}))
      ->capture_default_str();
  sr->add_option("--seed", r_seed, "matrix seed")->capture_default_str();
  sr->add_option("--n", r_n, "rows")->required();
  sr->add_option("--p", r_p, "columns")->required();
  sr->add_option("--r", r_r, "support size")->required();
  sr->add_option("--sampled", r_sampled,
                 "sample this many supports instead of the exhaustive scan "
                 "(0 = exhaustive)")
      ->capture_default_str();
  sr->add_option("--output", r_output, "write to file instead of stdout");

  // recover
  auto* sv = app.add_subcommand(
      "recover", "seeded l1-minimization recovery experiment");
  std::string v_ensemble = "gaussian", v_output;
  uint64_t v_seed = 0, v_n = 0, v_p = 0, v_s = 0, v_trials = 1,
           v_max_iter = 50000;
  double v_eta = 0.0, v_noise = 0.0;
  bool v_precheck = false, v_identity = false, v_per_trial = false;
  sv->add_option("--ensemble", v_ensemble, "gaussian or rademacher")
      ->check(CLI::IsMember({"gaussian", "rademacher"}))
      ->capture_default_str();
  sv->add_option("--seed", v_seed, "master seed")->capture_default_str();
  sv->add_option("--n", v_n, "rows")->required();
  sv->add_option("--p", v_p, "columns")->required();
  sv->add_option("--s", v_s, "planted sparsity")->required();
  sv->add_option("--eta", v_eta, "noise ball radius")->capture_default_str();
  sv->add_option("--noise-level", v_noise, "per-entry noise scale")
      ->capture_default_str();
  sv->add_option("--trials", v_trials, "number of seeded trials")
      ->capture_default_str();
  sv->add_flag("--ric-precheck", v_precheck,
               "exhaustive empirical RIC at order 2s before each trial");
  sv->add_flag("--identity", v_identity,
               "use the identity sensing matrix (requires n == p)");
  sv->add_option("--max-iter", v_max_iter, "solver iteration cap")
      ->capture_default_str();
  sv->add_flag("--per-trial", v_per_trial, "include per-trial records");
  sv->add_option("--output", v_output, "write to file instead of stdout");

  // fs-consts
  auto* sf = app.add_subcommand(
      "fs-consts",
      "verify the Rademacher constant chain and evaluate its bounds");
  std::optional<uint64_t> f_d1;
  std::vector<uint64_t> f_path, f_trace;
  std::vector<double> f_tail, f_moderate;
  double f_c0 = 1.0;
  std::string f_output;
  sf->add_option("--d1", f_d1, "evaluate the diagram bound at this s");
  sf->add_option("--path", f_path, "evaluate the path bound: n m_rows n_cols")
      ->expected(3);
  sf->add_option("--trace", f_trace,
                 "evaluate the trace bound: m m_rows n_cols")
      ->expected(3);
  sf->add_option("--tail", f_tail,
                 "evaluate the tail bound: m_rows n_cols eps")
      ->expected(3);
  sf->add_option("--c0", f_c0, "prefactor constant for --tail (not pinned)")
      ->capture_default_str();
  sf->add_option("--moderate", f_moderate,
                 "evaluate the moderate-range exponent: m_rows n_cols eps "
                 "c_big")
      ->expected(4);
  sf->add_option("--output", f_output, "write to file instead of stdout");

  // selftest
  auto* ss = app.add_subcommand(
      "selftest", "run the oracle suites; exit 0 iff everything passes");
  std::string s_suite, s_output;
  ss->add_option("--suite", s_suite, "run only this suite");
  ss->add_option("--output", s_output, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(sb)) {
      return cmd_bounds(mf_bounds, b_delta, b_rhobar, b_force, b_output);
    }
    if (app.got_subcommand(sp)) {
      return cmd_phase_curve(mf_curve, p_rho_min, p_rho_max, p_points,
                             p_output);
    }
    if (app.got_subcommand(sm)) {
      return cmd_mc_dev(mf_mc, m_ensemble, m_seed, m_n, m_rhobar, m_t,
                        m_trials, m_tail, m_check_fs, m_output);
    }
    if (app.got_subcommand(sr)) {
      return cmd_ric_exact(r_ensemble, r_seed, r_n, r_p, r_r, r_sampled,
                           r_output);
    }
    if (app.got_subcommand(sv)) {
      return cmd_recover(v_ensemble, v_seed, v_n, v_p, v_s, v_eta, v_noise,
                         v_trials, v_precheck, v_identity, v_max_iter,
                         v_per_trial, v_output);
    }
    if (app.got_subcommand(sf)) {
      return cmd_fs_consts(f_d1, f_path, f_trace, f_tail, f_c0, f_moderate,
                           f_output);
    }
    if (app.got_subcommand(ss)) {
      return cmd_selftest(s_suite, s_output);
    }
  } catch (const riclab::budget_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  std::cerr << "error: no subcommand selected\n";
  return 2;
}
