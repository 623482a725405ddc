#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sfrkit/core_model.hpp"
#include "sfrkit/frequency_trace.hpp"
#include "sfrkit/levenberg_marquardt.hpp"

namespace sfrkit {

/// Two lag bands: a fast one (tau1) and a standard one (tau2 >= tau1).
struct TwoBandPfr {
  LagBand fast;
  LagBand standard;
};

/// Single lag band standing in for a two-band response.
struct EquivalentBand {
  double pfr_mw = 0.0;
  double tau_s = 0.0;
  double fit_residual = 0.0;  ///< sum of squared PFR residuals, MW^2 (0 when not fitted)

  LagBand band() const { return {pfr_mw, tau_s}; }
};

/// tau'(r) = a [1 - exp(-b r)] + tau1 with r = PFR2 / PFR1.
struct TauSurfaceModel {
  double a = 0.0;
  double b = 0.0;
  double tau1_s = 0.0;
  double tau2_s = 0.0;

  double tau_at_ratio(double ratio) const;

  /// Published coefficients for tau1 = 0.4 s, tau2 = 2.0 s.
  static TauSurfaceModel canonical();
};

/// How canonical_equivalent treats PFR1 = 0.
enum class DegenerateMode {
  SingleBandPassthrough,  ///< return (PFR2, tau2) exactly
  ForceRatioFormula,      ///< evaluate the surface at ratio -> infinity (tau1 + a)
};

/// Uniform grid over [0, t_end] as an Eigen array, for curve fits.
Eigen::ArrayXd fit_time_grid(double t_end = 30.0, double dt = 0.01);

/**
 * Least-squares equivalent of a two-band response: minimises
 * sum_t [pfr (1 - e^{-t/tau}) - p(t)]^2 with pfr >= 0 and
 * tau in [tau1/2, 2 tau2]. A coarse scan over tau (with the optimal pfr for
 * each candidate) picks the starting point, then LM refines both.
 */
EquivalentBand fit_equivalent_band(const TwoBandPfr& tb, const Eigen::ArrayXd& t_grid,
                                   const LmOptions& options = {});

/// Square grid of band magnitudes, MW. Defaults to {10, 20, ..., 200}.
struct PfrGrid {
  std::vector<double> pfr1_mw;
  std::vector<double> pfr2_mw;

  static PfrGrid uniform(double step_mw, double max_mw, double min_mw);
  static PfrGrid default_grid() { return uniform(10.0, 200.0, 10.0); }
};

struct SurfaceSample {
  double pfr1_mw = 0.0;
  double pfr2_mw = 0.0;
  EquivalentBand fitted;
};

struct SurfaceFit {
  TauSurfaceModel model;
  double rms_residual = 0.0;         ///< RMS of tau-model residuals, s
  double max_pfr_deviation = 0.0;    ///< max |PFR' - (PFR1 + PFR2)| / (PFR1 + PFR2)
  std::vector<SurfaceSample> samples;
  std::size_t skipped_cells = 0;
  std::vector<std::string> warnings;
};

struct SurfaceOptions {
  double fit_t_end_s = 30.0;
  double fit_dt_s = 0.01;
  LmOptions lm;
  unsigned threads = 1;
};

/// Fits equivalent bands over the grid, then fits (a, b) of the tau surface.
/// Cells with PFR1 = 0 (undefined ratio) are skipped with a warning.
SurfaceFit build_tau_surface(double tau1_s, double tau2_s, const PfrGrid& grid,
                             const SurfaceOptions& options = {});

/// PFR' = PFR1 + PFR2, tau' from the surface model.
EquivalentBand canonical_equivalent(double pfr1_mw, double pfr2_mw, const TauSurfaceModel& model,
                                    DegenerateMode mode = DegenerateMode::SingleBandPassthrough);

/// Mean absolute percentage error of `approx` against `exact`. Samples where
/// |exact| < 1e-6 max|exact| are left out (Df(0) = 0 would divide by zero).
double mape(const FrequencyTrace& exact, const FrequencyTrace& approx);

using PfrCell = std::pair<double, double>;  ///< (PFR1, PFR2), MW

/// Every (PFR1, PFR2) pair of a square grid.
std::vector<PfrCell> square_cells(const PfrGrid& grid);

/// PFR1 in {step, 2 step, ...} below `total`, PFR2 = total - PFR1.
std::vector<PfrCell> iso_total_cells(double total_mw, double step_mw);

/// Default MAPE cells: total PFR of 210 MW split in 10 MW steps.
std::vector<PfrCell> default_mape_cells();

struct MapeCell {
  double pfr1_mw = 0.0;
  double pfr2_mw = 0.0;
  double mape_pct = 0.0;
};

struct MapeReport {
  std::vector<MapeCell> cells;
  double mean_pct = 0.0;
  double max_pct = 0.0;
};

struct MapeOptions {
  TimeGrid grid{30.0, 0.01};
  DegenerateMode mode = DegenerateMode::SingleBandPassthrough;
  unsigned threads = 1;
};

/// For each cell: exact two-band trace vs the single equivalent-band trace.
MapeReport mape_map(const SfrSystem& sys, double tau1_s, double tau2_s, std::span<const PfrCell> cells,
                    const TauSurfaceModel& model, const MapeOptions& options = {});

struct TauSweepCell {
  double tau1_s = 0.0;
  double tau2_s = 0.0;
  TauSurfaceModel model;
  double mean_mape_pct = 0.0;
  double max_mape_pct = 0.0;
};

struct TauSweepReport {
  std::vector<TauSweepCell> cells;
  double mean_pct = 0.0;  ///< mean of per-cell means
  double max_pct = 0.0;   ///< max of per-cell maxima
};

struct TauSweepOptions {
  PfrGrid fit_grid = PfrGrid::default_grid();
  std::vector<PfrCell> mape_cells = default_mape_cells();
  SurfaceOptions surface;
  MapeOptions mape;
  unsigned threads = 1;
};

/// Default sweep axes.
std::vector<double> default_sweep_tau1();
std::vector<double> default_sweep_tau2();

/// Refits the tau surface for every (tau1, tau2) with tau2 >= tau1 and
/// reports the MAPE statistics of each. Cells are ordered tau1-major.
TauSweepReport mape_tau_sweep(const SfrSystem& sys, std::span<const double> tau1_range,
                              std::span<const double> tau2_range, const TauSweepOptions& options = {});

}  // namespace sfrkit
