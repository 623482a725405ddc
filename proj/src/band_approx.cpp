#include "sfrkit/band_approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sfrkit/closed_form.hpp"
#include "sfrkit/errors.hpp"
#include "sfrkit/parallel.hpp"

namespace sfrkit {

namespace {

using Vec2 = Eigen::Vector2d;
using Jacobian2 = Eigen::Matrix<double, Eigen::Dynamic, 2>;

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kPrescanPoints = 24;

void validate_two_band(const TwoBandPfr& tb) {
  validate(tb.fast);
  validate(tb.standard);
  if (tb.fast.pfr_mw < 0.0 || tb.standard.pfr_mw < 0.0) throw InvalidInput("band magnitudes must be non-negative");
  if (!(tb.fast.pfr_mw + tb.standard.pfr_mw > 0.0)) throw InvalidInput("total PFR must be positive");
  if (tb.fast.tau_s > tb.standard.tau_s) throw InvalidInput("fast band must have the smaller time constant");
}

}  // namespace

double TauSurfaceModel::tau_at_ratio(double ratio) const {
  return tau1_s - a * std::expm1(-b * ratio);
}

TauSurfaceModel TauSurfaceModel::canonical() { return {1.3141629, 0.63075533, 0.4, 2.0}; }

Eigen::ArrayXd fit_time_grid(double t_end, double dt) { return TimeGrid{t_end, dt}.times(); }

EquivalentBand fit_equivalent_band(const TwoBandPfr& tb, const Eigen::ArrayXd& t_grid, const LmOptions& options) {
  validate_two_band(tb);
  if (t_grid.size() < 3) throw InvalidInput("fit time grid needs at least three samples");
  if (t_grid.minCoeff() > 0.0 || t_grid.maxCoeff() < 5.0 * tb.standard.tau_s * (1.0 - 1e-12))
    throw InvalidInput("fit time grid must span [0, 5 * tau2]");

  const Eigen::ArrayXd target = lag_pfr_values(tb.fast, t_grid) + lag_pfr_values(tb.standard, t_grid);
  const double tau_lo = 0.5 * tb.fast.tau_s;
  const double tau_hi = 2.0 * tb.standard.tau_s;

  // Coarse scan over tau with the closed-form optimal magnitude for each candidate.
  Vec2 start(tb.fast.pfr_mw + tb.standard.pfr_mw, tau_lo);
  double best_cost = kInf;
  for (int i = 0; i < kPrescanPoints; ++i) {
    const double tau = tau_lo * std::pow(tau_hi / tau_lo, static_cast<double>(i) / (kPrescanPoints - 1));
    const Eigen::ArrayXd shape = -(-t_grid / tau).exp() + 1.0;
    const double pfr = std::max(0.0, (shape * target).sum() / shape.square().sum());
    const double cost = (pfr * shape - target).square().sum();
    if (cost < best_cost) {
      best_cost = cost;
      start = Vec2(pfr, tau);
    }
  }

  auto problem = [&](const Vec2& x, Eigen::VectorXd& r, Jacobian2& jac) {
    const Eigen::ArrayXd decay = (-t_grid / x[1]).exp();
    r = (x[0] * (1.0 - decay) - target).matrix();
    jac.resize(t_grid.size(), 2);
    jac.col(0) = (1.0 - decay).matrix();
    jac.col(1) = (-x[0] * t_grid / (x[1] * x[1]) * decay).matrix();
  };
  const auto result = levenberg_marquardt<double, 2>(problem, start, Vec2(0.0, tau_lo), Vec2(kInf, tau_hi), options);
  return {result.params[0], result.params[1], result.cost};
}

PfrGrid PfrGrid::uniform(double step_mw, double max_mw, double min_mw) {
  if (!(step_mw > 0.0) || !(max_mw >= min_mw) || min_mw < 0.0) throw InvalidInput("bad PFR grid bounds");
  PfrGrid grid;
  const auto n = static_cast<int>(std::floor((max_mw - min_mw) / step_mw + 1e-9)) + 1;
  for (int i = 0; i < n; ++i) grid.pfr1_mw.push_back(min_mw + step_mw * i);
  grid.pfr2_mw = grid.pfr1_mw;
  return grid;
}

SurfaceFit build_tau_surface(double tau1_s, double tau2_s, const PfrGrid& grid, const SurfaceOptions& options) {
  if (!(tau1_s > 0.0) || !(tau2_s >= tau1_s)) throw InvalidInput("need 0 < tau1 <= tau2");
  const Eigen::ArrayXd t_grid = fit_time_grid(options.fit_t_end_s, options.fit_dt_s);

  SurfaceFit fit;
  std::vector<PfrCell> cells;
  for (double p1 : grid.pfr1_mw) {
    for (double p2 : grid.pfr2_mw) {
      if (p1 < 0.0 || p2 < 0.0) throw InvalidInput("PFR grid values must be non-negative");
      if (p1 == 0.0) {
        ++fit.skipped_cells;
        continue;
      }
      cells.emplace_back(p1, p2);
    }
  }
  if (fit.skipped_cells > 0)
    fit.warnings.push_back("skipped " + std::to_string(fit.skipped_cells) +
                           " cells with PFR1 = 0 (ratio PFR2/PFR1 undefined)");
  if (cells.empty()) throw InvalidInput("PFR grid has no cell with PFR1 > 0");

  fit.samples.resize(cells.size());
  parallel_for(cells.size(), options.threads, [&](std::size_t i) {
    const auto [p1, p2] = cells[i];
    const TwoBandPfr tb{{p1, tau1_s}, {p2, tau2_s}};
    fit.samples[i] = {p1, p2, fit_equivalent_band(tb, t_grid, options.lm)};
  });

  const auto n = static_cast<Eigen::Index>(cells.size());
  Eigen::ArrayXd ratio(n), tau(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& s = fit.samples[static_cast<std::size_t>(i)];
    ratio[i] = s.pfr2_mw / s.pfr1_mw;
    tau[i] = s.fitted.tau_s;
    const double total = s.pfr1_mw + s.pfr2_mw;
    fit.max_pfr_deviation = std::max(fit.max_pfr_deviation, std::abs(s.fitted.pfr_mw - total) / total);
  }

  auto problem = [&](const Vec2& x, Eigen::VectorXd& r, Jacobian2& jac) {
    const Eigen::ArrayXd decay = (-x[1] * ratio).exp();
    r = (x[0] * (1.0 - decay) + tau1_s - tau).matrix();
    jac.resize(n, 2);
    jac.col(0) = (1.0 - decay).matrix();
    jac.col(1) = (x[0] * ratio * decay).matrix();
  };
  const Vec2 start(std::max(tau.maxCoeff() - tau1_s, 1e-6), 1.0);
  const auto result = levenberg_marquardt<double, 2>(problem, start, Vec2(0.0, 1e-9), Vec2(kInf, 1e3), options.lm);

  fit.model = {result.params[0], result.params[1], tau1_s, tau2_s};
  fit.rms_residual = std::sqrt(result.cost / static_cast<double>(n));
  return fit;
}

EquivalentBand canonical_equivalent(double pfr1_mw, double pfr2_mw, const TauSurfaceModel& model, DegenerateMode mode) {
  if (pfr1_mw < 0.0 || pfr2_mw < 0.0 || !std::isfinite(pfr1_mw) || !std::isfinite(pfr2_mw))
    throw InvalidInput("band magnitudes must be finite and non-negative");
  if (pfr1_mw + pfr2_mw == 0.0) throw InvalidInput("total PFR must be positive");
  if (pfr1_mw == 0.0) {
    const double tau = mode == DegenerateMode::SingleBandPassthrough ? model.tau2_s : model.tau1_s + model.a;
    return {pfr2_mw, tau, 0.0};
  }
  return {pfr1_mw + pfr2_mw, model.tau_at_ratio(pfr2_mw / pfr1_mw), 0.0};
}

double mape(const FrequencyTrace& exact, const FrequencyTrace& approx) {
  const double dt_scale = std::max(std::abs(exact.dt), 1e-300);
  if (exact.size() != approx.size() || exact.t0 != approx.t0 || std::abs(exact.dt - approx.dt) > 1e-12 * dt_scale)
    throw InvalidInput("MAPE needs traces on the same time grid");
  if (exact.size() == 0) throw InvalidInput("MAPE of empty traces is undefined");

  const double threshold = 1e-6 * exact.samples.cwiseAbs().maxCoeff();
  double sum = 0.0;
  std::size_t used = 0;
  for (Eigen::Index i = 0; i < exact.samples.size(); ++i) {
    const double p = exact.samples[i];
    if (std::abs(p) < threshold || p == 0.0) continue;
    sum += std::abs((p - approx.samples[i]) / p);
    ++used;
  }
  if (used == 0) throw InvalidInput("MAPE undefined: every exact sample is (near) zero");
  return 100.0 * sum / static_cast<double>(used);
}

std::vector<PfrCell> square_cells(const PfrGrid& grid) {
  std::vector<PfrCell> cells;
  for (double p1 : grid.pfr1_mw)
    for (double p2 : grid.pfr2_mw) cells.emplace_back(p1, p2);
  return cells;
}

std::vector<PfrCell> iso_total_cells(double total_mw, double step_mw) {
  if (!(total_mw > 0.0) || !(step_mw > 0.0)) throw InvalidInput("iso-total grid needs positive total and step");
  std::vector<PfrCell> cells;
  for (int i = 1;; ++i) {
    const double p1 = step_mw * i;
    if (p1 >= total_mw - 1e-9 * total_mw) break;
    cells.emplace_back(p1, total_mw - p1);
  }
  return cells;
}

std::vector<PfrCell> default_mape_cells() { return iso_total_cells(210.0, 10.0); }

MapeReport mape_map(const SfrSystem& sys, double tau1_s, double tau2_s, std::span<const PfrCell> cells,
                    const TauSurfaceModel& model, const MapeOptions& options) {
  if (cells.empty()) throw InvalidInput("MAPE map needs at least one cell");
  if (!(tau1_s > 0.0) || !(tau2_s >= tau1_s)) throw InvalidInput("need 0 < tau1 <= tau2");
  if (std::abs(model.tau1_s - tau1_s) > 1e-12 * tau1_s) throw InvalidInput("surface model was built for another tau1");

  MapeReport report;
  report.cells.resize(cells.size());
  parallel_for(cells.size(), options.threads, [&](std::size_t i) {
    const auto [p1, p2] = cells[i];
    const LagBand exact_bands[] = {{p1, tau1_s}, {p2, tau2_s}};
    const LagBand approx_band[] = {canonical_equivalent(p1, p2, model, options.mode).band()};
    const double value = mape(lag_trace(sys, exact_bands, options.grid), lag_trace(sys, approx_band, options.grid));
    report.cells[i] = {p1, p2, value};
  });

  for (const auto& cell : report.cells) {
    report.mean_pct += cell.mape_pct;
    report.max_pct = std::max(report.max_pct, cell.mape_pct);
  }
  report.mean_pct /= static_cast<double>(report.cells.size());
  return report;
}

std::vector<double> default_sweep_tau1() { return {0.2, 0.4, 0.6, 0.8, 1.0}; }

std::vector<double> default_sweep_tau2() { return {0.2, 0.4, 0.6, 0.8, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0}; }

TauSweepReport mape_tau_sweep(const SfrSystem& sys, std::span<const double> tau1_range,
                              std::span<const double> tau2_range, const TauSweepOptions& options) {
  std::vector<std::pair<double, double>> pairs;
  for (double t1 : tau1_range)
    for (double t2 : tau2_range)
      if (t2 >= t1) pairs.emplace_back(t1, t2);
  if (pairs.empty()) throw InvalidInput("tau sweep has no cell with tau2 >= tau1");

  SurfaceOptions surface = options.surface;
  surface.threads = 1;
  MapeOptions mape_options = options.mape;
  mape_options.threads = 1;

  TauSweepReport report;
  report.cells.resize(pairs.size());
  parallel_for(pairs.size(), options.threads, [&](std::size_t i) {
    const auto [t1, t2] = pairs[i];
    const TauSurfaceModel model = build_tau_surface(t1, t2, options.fit_grid, surface).model;
    const MapeReport cell = mape_map(sys, t1, t2, options.mape_cells, model, mape_options);
    report.cells[i] = {t1, t2, model, cell.mean_pct, cell.max_pct};
  });

  for (const auto& cell : report.cells) {
    report.mean_pct += cell.mean_mape_pct;
    report.max_pct = std::max(report.max_pct, cell.max_mape_pct);
  }
  report.mean_pct /= static_cast<double>(report.cells.size());
  return report;
}

}  // namespace sfrkit
