#include "figures.hpp"

#include <array>
#include <cmath>

#include "sfrkit/applications.hpp"
#include "sfrkit/band_approx.hpp"
#include "sfrkit/closed_form.hpp"
#include "sfrkit/errors.hpp"
#include "sfrkit/numerical_oracle.hpp"
#include "sfrkit/trace_io.hpp"

namespace sfrkit::cli {

namespace {

// P_cont = 300 MW, KE = 9000 MW.s, P_load = 2000 MW, D = 0.04.
SfrSystem reference_system() { return SfrSystem({50.0, 9000.0, 2000.0, 0.04, 300.0}); }

// KE = 7000 MW.s, P_load = 2500 MW, D = 0.04 (contingency solved for).
DerivedParams contingency_study_params() { return derive_params({50.0, 7000.0, 2500.0, 0.04, 0.0}); }

constexpr double kOracleDt = 1e-3;
constexpr std::size_t kDecimate = 10;  // print every 10 ms
constexpr double kWindow = 30.0;

std::string label(double value) { return format_number(value); }

void ramp_comparison(std::ostream& out) {
  const SfrSystem sys = reference_system();
  const std::array<double, 3> ramp_times{6.0, 3.0, 1.0};
  std::vector<std::string> header{"t_s"};
  std::vector<FrequencyTrace> closed, oracle;
  for (double t_r : ramp_times) {
    const RampBand band[] = {{270.0, t_r}};
    closed.push_back(ramp_trace(sys, band, {kWindow, kOracleDt}));
    oracle.push_back(integrate(sys, make_pfr_function({}, band), {kOracleDt, kWindow}));
    header.push_back("closed_form_tr" + label(t_r) + "_hz");
    header.push_back("oracle_tr" + label(t_r) + "_hz");
  }
  CsvWriter csv(out, header);
  std::vector<double> row(header.size());
  for (std::size_t i = 0; i < closed[0].size(); i += kDecimate) {
    row[0] = closed[0].time_at(i);
    for (std::size_t j = 0; j < ramp_times.size(); ++j) {
      row[1 + 2 * j] = closed[j].samples[static_cast<Eigen::Index>(i)];
      row[2 + 2 * j] = oracle[j].samples[static_cast<Eigen::Index>(i)];
    }
    csv.row(row);
  }
}

void lag_shapes(std::ostream& out) {
  const std::array<double, 5> taus{0.4, 1.0, 2.0, 3.0, 4.0};
  std::vector<std::string> header{"t_s"};
  for (double tau : taus) header.push_back("p_tau" + label(tau) + "_mw");
  CsvWriter csv(out, header);
  const Eigen::ArrayXd t = TimeGrid{10.0, 0.01}.times();
  std::vector<double> row(header.size());
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    row[0] = t[i];
    for (std::size_t j = 0; j < taus.size(); ++j) row[j + 1] = lag_pfr_value({100.0, taus[j]}, t[i]);
    csv.row(row);
  }
}

void fitted_surface(std::ostream& out, std::ostream& notes, unsigned threads) {
  SurfaceOptions options;
  options.threads = threads;
  const SurfaceFit fit = build_tau_surface(0.4, 2.0, PfrGrid::default_grid(), options);
  CsvWriter csv(out, {"pfr1_mw", "pfr2_mw", "pfr_eq_mw", "tau_eq_s"});
  for (const auto& s : fit.samples) csv.row({s.pfr1_mw, s.pfr2_mw, s.fitted.pfr_mw, s.fitted.tau_s});
  notes << "a=" << format_number(fit.model.a) << " b=" << format_number(fit.model.b)
        << " max_pfr_deviation=" << format_number(fit.max_pfr_deviation) << '\n';
}

void lag_comparison(std::ostream& out, std::ostream& notes) {
  const SfrSystem sys = reference_system();
  const LagBand band[] = {{270.0, 2.0}};
  const FrequencyTrace closed = lag_trace(sys, band, {kWindow, kOracleDt});
  const FrequencyTrace oracle = integrate(sys, make_pfr_function(band, {}), {kOracleDt, kWindow});
  CsvWriter csv(out, {"t_s", "closed_form_hz", "oracle_hz"});
  for (std::size_t i = 0; i < closed.size(); i += kDecimate) {
    const auto k = static_cast<Eigen::Index>(i);
    csv.row({closed.time_at(i), closed.samples[k], oracle.samples[k]});
  }
  notes << "max_abs_gap_hz=" << format_number((closed.samples - oracle.samples).cwiseAbs().maxCoeff())
        << " (tau fixed at 2.0 s for this fixture)\n";
}

void model_surface(std::ostream& out) {
  const TauSurfaceModel model = TauSurfaceModel::canonical();
  const PfrGrid grid = PfrGrid::default_grid();
  CsvWriter csv(out, {"pfr1_mw", "pfr2_mw", "tau_model_s"});
  for (const auto& [p1, p2] : square_cells(grid)) csv.row({p1, p2, canonical_equivalent(p1, p2, model).tau_s});
}

void exact_vs_approximate(std::ostream& out) {
  const SfrSystem sys = reference_system();
  const TauSurfaceModel model = TauSurfaceModel::canonical();
  const std::array<PfrCell, 4> cases{{{210.0, 0.0}, {130.0, 80.0}, {50.0, 160.0}, {0.0, 210.0}}};
  const TimeGrid grid{kWindow, 0.01};
  std::vector<std::string> header{"t_s"};
  std::vector<FrequencyTrace> traces;
  for (const auto& [p1, p2] : cases) {
    const std::string tag = label(p1) + "_" + label(p2);
    const LagBand exact[] = {{p1, 0.4}, {p2, 2.0}};
    const LagBand approx[] = {canonical_equivalent(p1, p2, model).band()};
    traces.push_back(lag_trace(sys, exact, grid));
    traces.push_back(lag_trace(sys, approx, grid));
    header.push_back("exact_" + tag + "_hz");
    header.push_back("approx_" + tag + "_hz");
  }
  CsvWriter csv(out, header);
  std::vector<double> row(header.size());
  for (std::size_t i = 0; i < traces[0].size(); ++i) {
    row[0] = traces[0].time_at(i);
    for (std::size_t j = 0; j < traces.size(); ++j) row[j + 1] = traces[j].samples[static_cast<Eigen::Index>(i)];
    csv.row(row);
  }
}

void mape_contour(std::ostream& out, std::ostream& notes, unsigned threads) {
  SurfaceOptions surface;
  surface.threads = threads;
  const TauSurfaceModel model = build_tau_surface(0.4, 2.0, PfrGrid::default_grid(), surface).model;
  MapeOptions options;
  options.threads = threads;
  const auto cells = default_mape_cells();
  const MapeReport report = mape_map(reference_system(), 0.4, 2.0, cells, model, options);
  CsvWriter csv(out, {"pfr1_mw", "pfr2_mw", "mape_pct"});
  for (const auto& c : report.cells) csv.row({c.pfr1_mw, c.pfr2_mw, c.mape_pct});
  notes << "mean_mape_pct=" << format_number(report.mean_pct) << " max_mape_pct=" << format_number(report.max_pct)
        << '\n';
}

void contingency_vs_tau(std::ostream& out) {
  const DerivedParams dp = contingency_study_params();
  const SecurityPolicy policy{1.0 / 0.7, -1.25};
  const TauSurfaceModel model = TauSurfaceModel::canonical();
  CsvWriter csv(out, {"tau_s", "max_contingency_mw", "ffr_share"});
  for (int i = 8; i <= 34; ++i) {
    const double tau = i / 20.0;  // 0.40 .. 1.70 s
    double cap = 0.0;
    try {
      cap = max_contingency(dp, policy, tau);
    } catch (const BranchError&) {
      cap = asymptotic_max_contingency(dp, policy.k_policy, policy.delta_f_max_hz);
    }
    csv.row({tau, cap, required_ffr_share(model, tau)});
  }
}

void tau_validity(std::ostream& out, std::ostream& notes, unsigned threads) {
  TauSweepOptions options;
  options.threads = threads;
  const auto tau1 = default_sweep_tau1();
  const auto tau2 = default_sweep_tau2();
  const TauSweepReport report = mape_tau_sweep(reference_system(), tau1, tau2, options);
  CsvWriter csv(out, {"tau1_s", "tau2_s", "mean_mape_pct", "max_mape_pct"});
  for (const auto& c : report.cells) csv.row({c.tau1_s, c.tau2_s, c.mean_mape_pct, c.max_mape_pct});
  notes << "overall_mean_mape_pct=" << format_number(report.mean_pct)
        << " overall_max_mape_pct=" << format_number(report.max_pct) << '\n';
}

void universal_surface(std::ostream& out) {
  const double delta_f_max = -1.25;
  CsvWriter csv(out, {"A", "K", "f_AK"});
  for (int i = 1; i <= 40; ++i) {
    const double a = i / 20.0;  // 0.05 .. 2.0
    for (int j = 10; j <= 30; ++j) {
      const double k = j / 10.0;  // 1.0 .. 3.0
      double f = 0.0;
      if (1.0 + k * (a - 1.0) >= 0.0) {
        f = universal_max_contingency_factor(a, k, delta_f_max);
      } else {
        f = delta_f_max / (1.0 / k - 1.0);  // asymptotic cap per unit D'
      }
      csv.row({a, k, f});
    }
  }
}

}  // namespace

const std::vector<std::string>& figure_names() {
  static const std::vector<std::string> names{"fig1", "fig3", "fig4", "fig5", "fig6", "fig7",
                                              "fig8", "fig9", "fig10", "fig11"};
  return names;
}

void write_figure(const std::string& name, std::ostream& out, std::ostream& notes, unsigned threads) {
  if (name == "fig1") return ramp_comparison(out);
  if (name == "fig3") return lag_shapes(out);
  if (name == "fig4") return fitted_surface(out, notes, threads);
  if (name == "fig5") return lag_comparison(out, notes);
  if (name == "fig6") return model_surface(out);
  if (name == "fig7") return exact_vs_approximate(out);
  if (name == "fig8") return mape_contour(out, notes, threads);
  if (name == "fig9") return contingency_vs_tau(out);
  if (name == "fig10") return tau_validity(out, notes, threads);
  if (name == "fig11") return universal_surface(out);
  throw InvalidInput("unknown figure '" + name + "'");
}

}  // namespace sfrkit::cli
