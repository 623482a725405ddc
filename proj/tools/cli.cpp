#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "figures.hpp"
#include "sfrkit/applications.hpp"
#include "sfrkit/band_approx.hpp"
#include "sfrkit/closed_form.hpp"
#include "sfrkit/errors.hpp"
#include "sfrkit/numerical_oracle.hpp"
#include "sfrkit/scenario.hpp"
#include "sfrkit/trace_io.hpp"

namespace sfrkit::cli {

namespace {

using nlohmann::ordered_json;

// Base scenario used when --scenario is omitted; --set overrides apply to it.
constexpr const char* kDefaultScenario = R"({
  "system": {"f_n_hz": 50, "ke_mws": 9000, "p_load_mw": 2000, "d_relief": 0.04, "p_cont_mw": 300},
  "bands": [{"kind": "lag", "pfr_mw": 270, "tau_s": 2.0}],
  "sim": {"t_end_s": 30, "dt_s": 0.001}
})";

struct Options {
  std::string scenario;
  std::vector<std::string> overrides;
  std::string out;

  std::string method = "rk4";

  double pfr1 = 130.0;
  double pfr2 = 80.0;
  double tau1 = 0.4;
  double tau2 = 2.0;
  double fit_t_end = 30.0;
  double fit_dt = 0.01;
  double pfr_min = 10.0;
  double pfr_max = 200.0;
  double pfr_step = 10.0;

  std::string grid = "iso";
  double total = 210.0;
  bool force_ratio = false;
  std::optional<double> a;
  std::optional<double> b;
  bool canonical = false;

  std::vector<double> tau1_list = default_sweep_tau1();
  std::vector<double> tau2_list = default_sweep_tau2();

  double delta_f_max = -1.25;
  double k_policy = 1.0 / 0.7;
  std::optional<double> tau;
  std::optional<double> tau_min;
  std::optional<double> tau_max;
  double tau_step = 0.05;
  bool asymptotic_fallback = false;
  std::optional<double> k;

  std::string figure;
};

Scenario scenario_from(const Options& o) {
  if (o.scenario.empty()) return parse_scenario(kDefaultScenario, o.overrides);
  return load_scenario(o.scenario, o.overrides);
}

std::string dump(const ordered_json& doc) { return doc.dump(2) + "\n"; }

ordered_json number_or_null(std::optional<double> v) { return v ? ordered_json(*v) : ordered_json(nullptr); }

TauSurfaceModel surface_model(const Options& o, unsigned threads, std::ostream& err) {
  if (o.a || o.b) {
    if (!(o.a && o.b)) throw InvalidInput("--a and --b must be given together");
    return {*o.a, *o.b, o.tau1, o.tau2};
  }
  if (o.canonical) {
    const TauSurfaceModel model = TauSurfaceModel::canonical();
    if (o.tau1 != model.tau1_s || o.tau2 != model.tau2_s)
      throw InvalidInput("--canonical coefficients only apply to tau1 = 0.4 s, tau2 = 2.0 s");
    return model;
  }
  SurfaceOptions options;
  options.fit_t_end_s = o.fit_t_end;
  options.fit_dt_s = o.fit_dt;
  options.threads = threads;
  const SurfaceFit fit = build_tau_surface(o.tau1, o.tau2, PfrGrid::uniform(o.pfr_step, o.pfr_max, o.pfr_min), options);
  for (const auto& w : fit.warnings) err << "warning: " << w << '\n';
  return fit.model;
}

std::vector<PfrCell> mape_cells(const Options& o) {
  if (o.grid == "iso") return iso_total_cells(o.total, o.pfr_step);
  if (o.grid == "square") return square_cells(PfrGrid::uniform(o.pfr_step, o.pfr_max, o.pfr_min));
  throw InvalidInput("--grid must be 'iso' or 'square'");
}

void simulate(const Options& o, std::ostream& out) {
  const Scenario sc = scenario_from(o);
  IntegrationSpec spec{sc.sim.dt, sc.sim.t_end, IntegrationMethod::FixedStepRK4};
  if (o.method == "euler") spec.method = IntegrationMethod::ForwardEuler;
  else if (o.method != "rk4") throw InvalidInput("--method must be 'rk4' or 'euler'");
  write_trace_csv(out, integrate(SfrSystem(sc.system), make_pfr_function(sc.lag_bands, sc.ramp_bands), spec));
}

void compare(const Options& o, std::ostream& out, std::ostream& err) {
  const Scenario sc = scenario_from(o);
  const SfrSystem sys(sc.system);
  if (sc.lag_bands.empty() == sc.ramp_bands.empty())
    throw InvalidInput("compare needs bands of a single kind (all lag or all ramp)");
  const FrequencyTrace closed =
      sc.lag_bands.empty() ? ramp_trace(sys, sc.ramp_bands, sc.sim) : lag_trace(sys, sc.lag_bands, sc.sim);
  const FrequencyTrace oracle =
      integrate(sys, make_pfr_function(sc.lag_bands, sc.ramp_bands), {sc.sim.dt, sc.sim.t_end});

  CsvWriter csv(out, {"t_s", "closed_form_hz", "oracle_hz"});
  for (std::size_t i = 0; i < closed.size(); ++i) {
    const auto k = static_cast<Eigen::Index>(i);
    csv.row({closed.time_at(i), closed.samples[k], oracle.samples[k]});
  }
  const TraceExtremum cf = trace_nadir(closed);
  const TraceExtremum num = trace_nadir(oracle);
  err << "max_abs_gap_hz=" << format_number((closed.samples - oracle.samples).cwiseAbs().maxCoeff())
      << " closed_form_nadir_hz=" << format_number(cf.delta_f_hz) << " oracle_nadir_hz=" << format_number(num.delta_f_hz)
      << '\n';
}

void nadir(const Options& o, std::ostream& out) {
  const Scenario sc = scenario_from(o);
  const SfrSystem sys(sc.system);
  if (!sc.ramp_bands.empty())
    throw BranchError("no closed-form nadir exists for ramp responses; use 'compare' or 'simulate'");
  if (sc.lag_bands.size() != 1)
    throw InvalidInput("nadir needs exactly one lag band (approximate two bands with fit-band first)");
  const LagBand band = sc.lag_bands.front();
  const NadirResult r = lag_nadir(sys, band);
  const NadirConstants nc = nadir_constants(sys, band.pfr_mw, band.tau_s);
  ordered_json doc;
  doc["kind"] = r.kind == NadirKind::InteriorMinimum ? "interior_minimum" : "asymptotic";
  doc["t_nadir_s"] = number_or_null(r.t_nadir_s);
  doc["delta_f_nadir_hz"] = r.delta_f_nadir_hz;
  doc["max_rocof_hz_per_s"] = r.max_rocof_hz_per_s;
  doc["K"] = nc.k;
  doc["A"] = nc.a;
  doc["B"] = nc.b;
  out << dump(doc);
}

void fit_band(const Options& o, std::ostream& out) {
  const TwoBandPfr tb{{o.pfr1, o.tau1}, {o.pfr2, o.tau2}};
  const EquivalentBand eq = fit_equivalent_band(tb, fit_time_grid(o.fit_t_end, o.fit_dt));
  ordered_json doc;
  doc["pfr_eq_mw"] = eq.pfr_mw;
  doc["tau_eq_s"] = eq.tau_s;
  doc["fit_residual_mw2"] = eq.fit_residual;
  out << dump(doc);
}

void fit_surface(const Options& o, std::ostream& out, std::ostream& err, unsigned threads) {
  SurfaceOptions options;
  options.fit_t_end_s = o.fit_t_end;
  options.fit_dt_s = o.fit_dt;
  options.threads = threads;
  const SurfaceFit fit = build_tau_surface(o.tau1, o.tau2, PfrGrid::uniform(o.pfr_step, o.pfr_max, o.pfr_min), options);
  for (const auto& w : fit.warnings) err << "warning: " << w << '\n';
  ordered_json doc;
  doc["a"] = fit.model.a;
  doc["b"] = fit.model.b;
  doc["tau1_s"] = fit.model.tau1_s;
  doc["tau2_s"] = fit.model.tau2_s;
  doc["rms_residual"] = fit.rms_residual;
  doc["max_pfr_deviation"] = fit.max_pfr_deviation;
  out << dump(doc);
}

void mape_map_cmd(const Options& o, std::ostream& out, std::ostream& err, unsigned threads) {
  const Scenario sc = scenario_from(o);
  const TauSurfaceModel model = surface_model(o, threads, err);
  MapeOptions options;
  options.mode = o.force_ratio ? DegenerateMode::ForceRatioFormula : DegenerateMode::SingleBandPassthrough;
  options.threads = threads;
  const auto cells = mape_cells(o);
  const MapeReport report = mape_map(SfrSystem(sc.system), o.tau1, o.tau2, cells, model, options);
  CsvWriter csv(out, {"pfr1_mw", "pfr2_mw", "mape_pct"});
  for (const auto& c : report.cells) csv.row({c.pfr1_mw, c.pfr2_mw, c.mape_pct});
  err << "a=" << format_number(model.a) << " b=" << format_number(model.b)
      << " mean_mape_pct=" << format_number(report.mean_pct) << " max_mape_pct=" << format_number(report.max_pct)
      << '\n';
}

void tau_sweep(const Options& o, std::ostream& out, std::ostream& err, unsigned threads) {
  const Scenario sc = scenario_from(o);
  TauSweepOptions options;
  options.fit_grid = PfrGrid::uniform(o.pfr_step, o.pfr_max, o.pfr_min);
  options.mape_cells = mape_cells(o);
  options.surface.fit_t_end_s = o.fit_t_end;
  options.surface.fit_dt_s = o.fit_dt;
  options.mape.mode = o.force_ratio ? DegenerateMode::ForceRatioFormula : DegenerateMode::SingleBandPassthrough;
  options.threads = threads;
  const TauSweepReport report = mape_tau_sweep(SfrSystem(sc.system), o.tau1_list, o.tau2_list, options);
  CsvWriter csv(out, {"tau1_s", "tau2_s", "mean_mape_pct", "max_mape_pct"});
  for (const auto& c : report.cells) csv.row({c.tau1_s, c.tau2_s, c.mean_mape_pct, c.max_mape_pct});
  err << "overall_mean_mape_pct=" << format_number(report.mean_pct)
      << " overall_max_mape_pct=" << format_number(report.max_pct) << '\n';
}

double capped_contingency(const DerivedParams& dp, const SecurityPolicy& policy, double tau, bool fallback,
                          std::string& branch) {
  try {
    const double cap = max_contingency(dp, policy, tau);
    branch = "interior_minimum";
    return cap;
  } catch (const BranchError&) {
    if (!fallback) throw;
    branch = "asymptotic";
    return asymptotic_max_contingency(dp, policy.k_policy, policy.delta_f_max_hz);
  }
}

void max_contingency_cmd(const Options& o, std::ostream& out) {
  const Scenario sc = scenario_from(o);
  const DerivedParams dp = derive_params(sc.system);
  const SecurityPolicy policy{o.k_policy, o.delta_f_max};
  if (o.tau_min || o.tau_max) {
    if (!(o.tau_min && o.tau_max) || !(o.tau_step > 0.0) || *o.tau_max < *o.tau_min)
      throw InvalidInput("a tau sweep needs --tau-min <= --tau-max and --tau-step > 0");
    const TauSurfaceModel model = TauSurfaceModel::canonical();
    CsvWriter csv(out, {"tau_s", "max_contingency_mw", "ffr_share"});
    const auto steps = static_cast<int>(std::floor((*o.tau_max - *o.tau_min) / o.tau_step + 1e-9));
    for (int i = 0; i <= steps; ++i) {
      const double tau = *o.tau_min + i * o.tau_step;
      std::string branch;
      const double cap = capped_contingency(dp, policy, tau, o.asymptotic_fallback, branch);
      double share = std::numeric_limits<double>::quiet_NaN();
      try {
        share = required_ffr_share(model, tau);
      } catch (const BranchError&) {
      }
      csv.row({tau, cap, share});
    }
    return;
  }
  if (!o.tau) throw InvalidInput("max-contingency needs --tau or a --tau-min/--tau-max sweep");
  std::string branch;
  const double cap = capped_contingency(dp, policy, *o.tau, o.asymptotic_fallback, branch);
  ordered_json doc;
  doc["tau_s"] = *o.tau;
  doc["A"] = dp.d_prime * *o.tau / (2.0 * dp.inertia);
  doc["K"] = o.k_policy;
  doc["delta_f_max_hz"] = o.delta_f_max;
  doc["branch"] = branch;
  doc["max_contingency_mw"] = cap;
  out << dump(doc);
}

void min_tau(const Options& o, std::ostream& out) {
  const Scenario sc = scenario_from(o);
  const DerivedParams dp = derive_params(sc.system);
  double k = 0.0;
  if (o.k) {
    k = *o.k;
  } else {
    double total = 0.0;
    for (const auto& band : sc.lag_bands) total += band.pfr_mw;
    if (total == 0.0) throw InvalidInput("min-tau needs --k or lag bands in the scenario");
    k = sc.system.p_cont_mw / total;
  }
  ordered_json doc;
  doc["K"] = k;
  doc["min_effective_tau_s"] = min_effective_tau(dp, k);
  out << dump(doc);
}

ordered_json checked(double analytic, double numeric) {
  ordered_json entry;
  entry["analytic"] = analytic;
  entry["finite_difference"] = numeric;
  entry["relative_error"] = std::abs(analytic - numeric) / std::max(std::abs(numeric), 1e-300);
  return entry;
}

template <typename F>
double central_difference(F&& f, double x, double relative_step = 1e-5) {
  const double h = relative_step * std::abs(x);
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

void sensitivities(const Options& o, std::ostream& out, std::ostream& err, unsigned threads) {
  const Scenario sc = scenario_from(o);
  const DerivedParams dp = derive_params(sc.system);
  Options model_options = o;
  if (!o.a && !o.b) model_options.canonical = model_options.canonical || (o.tau1 == 0.4 && o.tau2 == 2.0);
  const TauSurfaceModel model = surface_model(model_options, threads, err);
  const double tau = o.tau ? *o.tau : model.tau_at_ratio(o.pfr2 / o.pfr1);
  const double dfm = o.delta_f_max;

  const PcontSensitivity ps = sensitivity_pcont(dp, dfm, tau);
  const TauBandSensitivity ts = sensitivity_tau_bands(model, o.pfr1, o.pfr2);
  const double tau_bands = model.tau_at_ratio(o.pfr2 / o.pfr1);
  const PcontBandSensitivity pb = sensitivity_pcont_bands(dp, dfm, model, o.pfr1, o.pfr2);

  auto cap_tau = [&](double t) { return special_case_max_contingency(dp, dfm, t); };
  auto cap_h = [&](double h) { return special_case_max_contingency({dp.d_prime, h}, dfm, tau); };
  auto tau_p1 = [&](double p1) { return model.tau_at_ratio(o.pfr2 / p1); };
  auto tau_p2 = [&](double p2) { return model.tau_at_ratio(p2 / o.pfr1); };
  auto cap_p1 = [&](double p1) { return cap_tau(tau_p1(p1)); };
  auto cap_p2 = [&](double p2) { return cap_tau(tau_p2(p2)); };

  ordered_json doc;
  doc["tau_s"] = tau;
  doc["A"] = dp.d_prime * tau / (2.0 * dp.inertia);
  doc["max_contingency_k1_mw"] = cap_tau(tau);
  doc["dP_dtau"] = checked(ps.dp_dtau, central_difference(cap_tau, tau));
  doc["dP_dH"] = checked(ps.dp_dh, central_difference(cap_h, dp.inertia));
  doc["tau_eq_s"] = tau_bands;
  doc["dtau_dPFR1"] = checked(ts.dtau_dpfr1, central_difference(tau_p1, o.pfr1));
  doc["dtau_dPFR2"] = checked(ts.dtau_dpfr2, o.pfr2 > 0.0 ? central_difference(tau_p2, o.pfr2)
                                                          : (tau_p2(1e-6 * o.pfr1) - tau_p2(0.0)) / (1e-6 * o.pfr1));
  doc["dP_dPFR1"] = checked(pb.dp_dpfr1, central_difference(cap_p1, o.pfr1));
  doc["dP_dPFR2"] = checked(pb.dp_dpfr2, o.pfr2 > 0.0 ? central_difference(cap_p2, o.pfr2)
                                                      : (cap_p2(1e-6 * o.pfr1) - cap_p2(0.0)) / (1e-6 * o.pfr1));
  try {
    doc["dP_dK_finite_difference"] = max_contingency_dk(dp, {o.k_policy, dfm}, tau);
  } catch (const BranchError&) {
    doc["dP_dK_finite_difference"] = nullptr;
  }
  out << dump(doc);
}

}  // namespace

unsigned sweep_threads() {
  if (const char* env = std::getenv("SFRKIT_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && value > 0) return static_cast<unsigned>(value);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Closed-form system frequency response toolkit", "sfrkit"};
  app.require_subcommand(1);

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", o.scenario, "Scenario JSON file");
    cmd->add_option("--set", o.overrides, "Override a scenario field, e.g. system.ke_mws=7000");
    cmd->add_option("-o,--out", o.out, "Output file (default: stdout)");
  };
  auto add_bands = [&](CLI::App* cmd) {
    cmd->add_option("--pfr1", o.pfr1, "Fast band magnitude, MW");
    cmd->add_option("--pfr2", o.pfr2, "Standard band magnitude, MW");
    cmd->add_option("--tau1", o.tau1, "Fast band time constant, s");
    cmd->add_option("--tau2", o.tau2, "Standard band time constant, s");
  };
  auto add_fit_grid = [&](CLI::App* cmd) {
    cmd->add_option("--fit-t-end", o.fit_t_end, "Curve-fit window, s");
    cmd->add_option("--fit-dt", o.fit_dt, "Curve-fit sample step, s");
    cmd->add_option("--pfr-min", o.pfr_min, "Smallest grid magnitude, MW");
    cmd->add_option("--pfr-max", o.pfr_max, "Largest grid magnitude, MW");
    cmd->add_option("--pfr-step", o.pfr_step, "Grid step, MW");
  };
  auto add_mape_grid = [&](CLI::App* cmd) {
    cmd->add_option("--grid", o.grid, "MAPE cells: 'iso' (fixed total) or 'square'");
    cmd->add_option("--total", o.total, "Total PFR of the iso grid, MW");
    cmd->add_flag("--force-ratio-formula", o.force_ratio, "Use the surface formula even when PFR1 = 0");
  };
  auto add_model = [&](CLI::App* cmd) {
    cmd->add_option("--a", o.a, "Surface coefficient a, s");
    cmd->add_option("--b", o.b, "Surface coefficient b");
    cmd->add_flag("--canonical", o.canonical, "Use the published coefficients (tau1 = 0.4, tau2 = 2.0)");
  };

  auto* simulate_cmd = app.add_subcommand("simulate", "Numerical (RK4) trace of the scenario");
  add_io(simulate_cmd);
  simulate_cmd->add_option("--method", o.method, "rk4 or euler");

  auto* compare_cmd = app.add_subcommand("compare", "Closed form vs numerical trace");
  add_io(compare_cmd);

  auto* nadir_cmd = app.add_subcommand("nadir", "Nadir, nadir time and max RoCoF for one lag band");
  add_io(nadir_cmd);

  auto* fit_band_cmd = app.add_subcommand("fit-band", "Least-squares single-band equivalent of two lag bands");
  add_io(fit_band_cmd);
  add_bands(fit_band_cmd);
  add_fit_grid(fit_band_cmd);

  auto* fit_surface_cmd = app.add_subcommand("fit-surface", "Fit the tau surface model over a PFR grid");
  add_io(fit_surface_cmd);
  add_bands(fit_surface_cmd);
  add_fit_grid(fit_surface_cmd);

  auto* mape_cmd = app.add_subcommand("mape-map", "MAPE of the single-band approximation per PFR cell");
  add_io(mape_cmd);
  add_bands(mape_cmd);
  add_fit_grid(mape_cmd);
  add_mape_grid(mape_cmd);
  add_model(mape_cmd);

  auto* sweep_cmd = app.add_subcommand("tau-sweep", "Mean/max MAPE over (tau1, tau2) pairs");
  add_io(sweep_cmd);
  add_fit_grid(sweep_cmd);
  add_mape_grid(sweep_cmd);
  sweep_cmd->add_option("--tau1-values", o.tau1_list, "Comma-separated tau1 values, s")->delimiter(',');
  sweep_cmd->add_option("--tau2-values", o.tau2_list, "Comma-separated tau2 values, s")->delimiter(',');

  auto* cap_cmd = app.add_subcommand("max-contingency", "Largest contingency meeting the deviation limit");
  add_io(cap_cmd);
  cap_cmd->add_option("--delta-f-max", o.delta_f_max, "Maximum allowable deviation, Hz");
  cap_cmd->add_option("--k-policy", o.k_policy, "Contingency-to-PFR ratio K");
  cap_cmd->add_option("--tau", o.tau, "Aggregate time constant, s");
  cap_cmd->add_option("--tau-min", o.tau_min, "Sweep start, s");
  cap_cmd->add_option("--tau-max", o.tau_max, "Sweep end, s");
  cap_cmd->add_option("--tau-step", o.tau_step, "Sweep step, s");
  cap_cmd->add_flag("--asymptotic-fallback", o.asymptotic_fallback, "Use the asymptotic cap when A < 1 - 1/K");

  auto* min_tau_cmd = app.add_subcommand("min-tau", "Practical lower bound on the aggregate time constant");
  add_io(min_tau_cmd);
  min_tau_cmd->add_option("--k", o.k, "K = P_cont / PFR (default: from the scenario)");

  auto* sens_cmd = app.add_subcommand("sensitivities", "K = 1 sensitivities with finite-difference checks");
  add_io(sens_cmd);
  add_bands(sens_cmd);
  add_fit_grid(sens_cmd);
  add_model(sens_cmd);
  sens_cmd->add_option("--delta-f-max", o.delta_f_max, "Maximum allowable deviation, Hz");
  sens_cmd->add_option("--tau", o.tau, "Aggregate time constant, s (default: surface value)");
  sens_cmd->add_option("--k-policy", o.k_policy, "K used for the dP/dK finite difference");

  auto* fig_cmd = app.add_subcommand("reproduce-figure", "Emit the data table behind a figure");
  fig_cmd->add_option("figure", o.figure, "Figure name")->required()->check(CLI::IsMember(figure_names()));
  fig_cmd->add_option("-o,--out", o.out, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kValidationError;
  }

  std::ostringstream artifact;
  try {
    const unsigned threads = sweep_threads();
    if (simulate_cmd->parsed()) simulate(o, artifact);
    else if (compare_cmd->parsed()) compare(o, artifact, err);
    else if (nadir_cmd->parsed()) nadir(o, artifact);
    else if (fit_band_cmd->parsed()) fit_band(o, artifact);
    else if (fit_surface_cmd->parsed()) fit_surface(o, artifact, err, threads);
    else if (mape_cmd->parsed()) mape_map_cmd(o, artifact, err, threads);
    else if (sweep_cmd->parsed()) tau_sweep(o, artifact, err, threads);
    else if (cap_cmd->parsed()) max_contingency_cmd(o, artifact);
    else if (min_tau_cmd->parsed()) min_tau(o, artifact);
    else if (sens_cmd->parsed()) sensitivities(o, artifact, err, threads);
    else if (fig_cmd->parsed()) write_figure(o.figure, artifact, err, threads);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kValidationError;
  } catch (const BranchError& e) {
    err << "branch error: " << e.what() << '\n';
    return kBranchError;
  } catch (const FitFailure& e) {
    err << "fit failure: " << e.what() << " (best cost " << format_number(e.best_cost()) << ")\n";
    return kBranchError;
  }

  if (o.out.empty()) {
    out << artifact.str();
    return kOk;
  }
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot write '" << o.out << "'\n";
    return kValidationError;
  }
  file << artifact.str();
  return file ? kOk : kValidationError;
}

}  // namespace sfrkit::cli
