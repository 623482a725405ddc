#include "sfrkit/closed_form.hpp"

#include <cmath>
#include <string>

#include "sfrkit/errors.hpp"

namespace sfrkit {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidInput("time must be non-negative and finite");
}

template <typename Band>
void require_bands(std::span<const Band> bands) {
  if (bands.empty()) throw InvalidInput("at least one response band is required");
}

// 1 - exp(-D' t / 2H)
double settle_fraction(const SfrSystem& sys, double t) { return -std::expm1(-sys.damping_rate() * t); }

// PFR tau / (D' tau - 2H) * (e^{-t/tau} - e^{-D't/2H}), continuous across D' tau = 2H.
double lag_transient(const SfrSystem& sys, const LagBand& band, double t) {
  const double two_h = 2.0 * sys.inertia();
  const double alpha = sys.damping_rate();
  const double gap = sys.d_prime() * band.tau_s - two_h;
  if (std::abs(gap) <= kSingularityEps * two_h) return band.pfr_mw * t * std::exp(-alpha * t) / two_h;

  const double delta = gap / (two_h * band.tau_s);  // alpha - 1/tau
  if (std::abs(delta * t) < 1.0) return band.pfr_mw * std::exp(-alpha * t) * std::expm1(delta * t) / (two_h * delta);
  return band.pfr_mw * band.tau_s / gap * (std::exp(-t / band.tau_s) - std::exp(-alpha * t));
}

double multi_lag_unchecked(const SfrSystem& sys, std::span<const LagBand> bands, double t) {
  double total = 0.0;
  double transient = 0.0;
  for (const auto& band : bands) {
    total += band.pfr_mw;
    transient += lag_transient(sys, band, t);
  }
  return (total - sys.p_cont()) / sys.d_prime() * settle_fraction(sys, t) - transient;
}

double multi_ramp_unchecked(const SfrSystem& sys, std::span<const RampBand> bands, double t) {
  const double dp = sys.d_prime();
  const double h = sys.inertia();
  double rate = 0.0;
  for (const auto& band : bands) rate += band.rate();
  return rate * t / dp - (2.0 * rate * h / (dp * dp) + sys.p_cont() / dp) * settle_fraction(sys, t);
}

struct LagGroups {
  double a;
  double k;
};

LagGroups lag_groups(const SfrSystem& sys, const LagBand& band) {
  sys.require_damping();
  validate(band);
  if (sys.p_cont() == 0.0) throw InvalidInput("nadir needs a non-zero contingency");
  if (band.pfr_mw == 0.0) throw InvalidInput("nadir needs a non-zero PFR band");
  const LagBand one[] = {band};
  validate_band_signs(sys.p_cont(), one);
  return {sys.d_prime() * band.tau_s / (2.0 * sys.inertia()), sys.p_cont() / band.pfr_mw};
}

BranchError asymptotic_branch_error() {
  return BranchError("asymptotic response: no interior nadir, use asymptotic_nadir ((PFR - P_cont)/D')");
}

}  // namespace

double ramp_delta_f(const SfrSystem& sys, const RampBand& band, double t) {
  const RampBand one[] = {band};
  return multi_ramp_delta_f(sys, one, t);
}

double multi_ramp_delta_f(const SfrSystem& sys, std::span<const RampBand> bands, double t) {
  sys.require_damping();
  require_bands(bands);
  validate_band_signs(sys.p_cont(), bands);
  require_time(t);
  return multi_ramp_unchecked(sys, bands, t);
}

double lag_delta_f(const SfrSystem& sys, const LagBand& band, double t) {
  const LagBand one[] = {band};
  return multi_lag_delta_f(sys, one, t);
}

double multi_lag_delta_f(const SfrSystem& sys, std::span<const LagBand> bands, double t) {
  sys.require_damping();
  require_bands(bands);
  validate_band_signs(sys.p_cont(), bands);
  require_time(t);
  return multi_lag_unchecked(sys, bands, t);
}

double nadir_bracket(double a, double k) {
  const double x = a - 1.0;
  const double b = 1.0 + k * x;
  if (b < -kSingularityEps) throw asymptotic_branch_error();
  if (b <= kSingularityEps) return 1.0 - k;
  const double power = std::abs(x) <= kSingularityEps ? std::exp(-k) : std::exp(-std::log1p(k * x) / x);
  return 1.0 - k - power;
}

bool nadir_solvable(const SfrSystem& sys, const LagBand& band) {
  const auto [a, k] = lag_groups(sys, band);
  return 1.0 + k * (a - 1.0) > kSingularityEps;
}

double lag_nadir_time(const SfrSystem& sys, const LagBand& band) {
  const auto [a, k] = lag_groups(sys, band);
  const double x = a - 1.0;
  if (!(1.0 + k * x > kSingularityEps)) throw asymptotic_branch_error();
  if (std::abs(x) <= kSingularityEps) return k * band.tau_s;
  return band.tau_s * std::log1p(k * x) / x;
}

double lag_nadir_deviation(const SfrSystem& sys, const LagBand& band) {
  const auto [a, k] = lag_groups(sys, band);
  if (!(1.0 + k * (a - 1.0) > kSingularityEps)) throw asymptotic_branch_error();
  return band.pfr_mw / sys.d_prime() * nadir_bracket(a, k);
}

double asymptotic_nadir(const SfrSystem& sys, double total_pfr_mw) {
  sys.require_damping();
  if (!std::isfinite(total_pfr_mw)) throw InvalidInput("total PFR must be finite");
  return (total_pfr_mw - sys.p_cont()) / sys.d_prime();
}

double max_rocof(const SfrSystem& sys) { return -sys.p_cont() / (2.0 * sys.inertia()); }

NadirResult lag_nadir(const SfrSystem& sys, const LagBand& band) {
  NadirResult result;
  result.max_rocof_hz_per_s = max_rocof(sys);
  if (nadir_solvable(sys, band)) {
    result.kind = NadirKind::InteriorMinimum;
    result.t_nadir_s = lag_nadir_time(sys, band);
    result.delta_f_nadir_hz = lag_nadir_deviation(sys, band);
  } else {
    result.kind = NadirKind::Asymptotic;
    result.delta_f_nadir_hz = asymptotic_nadir(sys, band.pfr_mw);
  }
  return result;
}

FrequencyTrace lag_trace(const SfrSystem& sys, std::span<const LagBand> bands, const TimeGrid& grid) {
  sys.require_damping();
  require_bands(bands);
  validate_band_signs(sys.p_cont(), bands);
  const std::size_t n = grid.sample_count();
  FrequencyTrace trace{0.0, grid.dt, Eigen::VectorXd(static_cast<Eigen::Index>(n))};
  for (std::size_t i = 0; i < n; ++i)
    trace.samples[static_cast<Eigen::Index>(i)] = multi_lag_unchecked(sys, bands, trace.time_at(i));
  return trace;
}

FrequencyTrace ramp_trace(const SfrSystem& sys, std::span<const RampBand> bands, const TimeGrid& grid) {
  sys.require_damping();
  require_bands(bands);
  validate_band_signs(sys.p_cont(), bands);
  const std::size_t n = grid.sample_count();
  FrequencyTrace trace{0.0, grid.dt, Eigen::VectorXd(static_cast<Eigen::Index>(n))};
  for (std::size_t i = 0; i < n; ++i)
    trace.samples[static_cast<Eigen::Index>(i)] = multi_ramp_unchecked(sys, bands, trace.time_at(i));
  return trace;
}

}  // namespace sfrkit
