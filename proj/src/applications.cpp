#include "sfrkit/applications.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "sfrkit/closed_form.hpp"
#include "sfrkit/errors.hpp"

namespace sfrkit {

namespace {

void validate(const DerivedParams& dp) {
  if (!(dp.d_prime > 0.0) || !std::isfinite(dp.d_prime)) throw InvalidInput("D' must be positive");
  if (!(dp.inertia > 0.0) || !std::isfinite(dp.inertia)) throw InvalidInput("H must be positive");
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) throw InvalidInput(std::string(what) + " must be positive");
}

void require_deviation(double delta_f_max_hz) {
  if (delta_f_max_hz == 0.0 || !std::isfinite(delta_f_max_hz))
    throw InvalidInput("maximum frequency deviation must be non-zero");
}

double a_group(const DerivedParams& dp, double tau_s) { return dp.d_prime * tau_s / (2.0 * dp.inertia); }

// A^(1/(A-1)), with limit e at A = 1.
double special_power(double a) {
  const double x = a - 1.0;
  if (std::abs(x) <= kSingularityEps) return std::numbers::e;
  return std::exp(std::log1p(x) / x);
}

// (A - 1 - A ln A) / (A - 1)^2, with limit -1/2 at A = 1.
double special_slope(double a) {
  const double x = a - 1.0;
  if (std::abs(x) < 1e-4) return -0.5 + x / 6.0 - x * x / 12.0;
  return (x - a * std::log(a)) / (x * x);
}

}  // namespace

NadirConstants nadir_constants(double a, double k) {
  require_positive(a, "A");
  require_positive(k, "K");
  NadirConstants nc;
  nc.a = a;
  nc.k = k;
  nc.b = 1.0 + k * (a - 1.0);
  nc.singular_a = std::abs(a - 1.0) <= kSingularityEps;
  nc.c = nc.singular_a ? std::numeric_limits<double>::infinity() : a / (a - 1.0);
  nc.asymptotic = nc.b <= kSingularityEps;
  return nc;
}

NadirConstants nadir_constants(const SfrSystem& sys, double pfr_mw, double tau_s) {
  sys.require_damping();
  if (pfr_mw == 0.0 || !std::isfinite(pfr_mw)) throw InvalidInput("PFR must be non-zero");
  require_positive(tau_s, "tau");
  return nadir_constants(a_group(sys.derived(), tau_s), sys.p_cont() / pfr_mw);
}

double max_contingency(const DerivedParams& dp, const SecurityPolicy& policy, double tau_s) {
  validate(dp);
  require_positive(tau_s, "tau");
  require_positive(policy.k_policy, "K");
  require_deviation(policy.delta_f_max_hz);
  const double a = a_group(dp, tau_s);
  const double k = policy.k_policy;
  const double b = 1.0 + k * (a - 1.0);
  if (b < -kSingularityEps)
    throw BranchError("asymptotic region (A < 1 - 1/K): use asymptotic_max_contingency");
  if (b <= kSingularityEps) return asymptotic_max_contingency(dp, k, policy.delta_f_max_hz);
  return k * dp.d_prime * policy.delta_f_max_hz / nadir_bracket(a, k);
}

double universal_max_contingency_factor(double a, double k, double delta_f_max_hz) {
  require_positive(a, "A");
  require_positive(k, "K");
  require_deviation(delta_f_max_hz);
  if (1.0 + k * (a - 1.0) < -kSingularityEps)
    throw BranchError("asymptotic region (A < 1 - 1/K): no interior nadir, use the asymptotic cap");
  return k * delta_f_max_hz / nadir_bracket(a, k);
}

double asymptotic_max_contingency(const DerivedParams& dp, double k_policy, double delta_f_max_hz) {
  validate(dp);
  require_deviation(delta_f_max_hz);
  if (!(k_policy > 1.0)) throw BranchError("K <= 1: the settling deviation never reaches the limit, cap is unbounded");
  return delta_f_max_hz / (1.0 / k_policy - 1.0) * dp.d_prime;
}

double min_effective_tau(const DerivedParams& dp, double k) {
  validate(dp);
  require_positive(k, "K");
  return std::max(0.0, (1.0 - 1.0 / k) * 2.0 * dp.inertia / dp.d_prime);
}

double special_case_max_contingency(const DerivedParams& dp, double delta_f_max_hz, double tau_s) {
  validate(dp);
  require_positive(tau_s, "tau");
  require_deviation(delta_f_max_hz);
  return -dp.d_prime * delta_f_max_hz * special_power(a_group(dp, tau_s));
}

PcontSensitivity sensitivity_pcont(const DerivedParams& dp, double delta_f_max_hz, double tau_s) {
  validate(dp);
  require_positive(tau_s, "tau");
  require_deviation(delta_f_max_hz);
  const double a = a_group(dp, tau_s);
  const double common = dp.d_prime * delta_f_max_hz * special_slope(a) * special_power(a);
  return {-common / tau_s, common / dp.inertia};
}

TauBandSensitivity sensitivity_tau_bands(const TauSurfaceModel& model, double pfr1_mw, double pfr2_mw) {
  if (!(pfr1_mw > 0.0)) throw InvalidInput("PFR1 must be positive: ratio PFR2/PFR1 is singular");
  if (pfr2_mw < 0.0) throw InvalidInput("PFR2 must be non-negative");
  const double decay = std::exp(-model.b * pfr2_mw / pfr1_mw);
  const double ab = model.a * model.b;
  return {-ab * pfr2_mw / (pfr1_mw * pfr1_mw) * decay, ab / pfr1_mw * decay};
}

PcontBandSensitivity sensitivity_pcont_bands(const DerivedParams& dp, double delta_f_max_hz,
                                             const TauSurfaceModel& model, double pfr1_mw, double pfr2_mw) {
  const TauBandSensitivity tau_sens = sensitivity_tau_bands(model, pfr1_mw, pfr2_mw);
  const double tau = model.tau_at_ratio(pfr2_mw / pfr1_mw);
  const PcontSensitivity p_sens = sensitivity_pcont(dp, delta_f_max_hz, tau);
  return {p_sens.dp_dtau * tau_sens.dtau_dpfr1, p_sens.dp_dtau * tau_sens.dtau_dpfr2};
}

double max_contingency_dk(const DerivedParams& dp, const SecurityPolicy& policy, double tau_s, double relative_step) {
  require_positive(relative_step, "finite-difference step");
  const double h = relative_step * policy.k_policy;
  SecurityPolicy up = policy, down = policy;
  up.k_policy += h;
  down.k_policy -= h;
  return (max_contingency(dp, up, tau_s) - max_contingency(dp, down, tau_s)) / (2.0 * h);
}

double required_ffr_share(const TauSurfaceModel& model, double tau_target_s) {
  if (!(model.a > 0.0) || !(model.b > 0.0)) throw InvalidInput("surface model needs a > 0 and b > 0");
  const double rise = tau_target_s - model.tau1_s;
  if (!(rise >= 0.0) || !(rise < model.a))
    throw BranchError("target tau outside the attainable range [tau1, tau1 + a)");
  const double ratio = -std::log1p(-rise / model.a) / model.b;
  return 1.0 / (1.0 + ratio);
}

}  // namespace sfrkit
