#include "sfrkit/core_model.hpp"

#include <cmath>
#include <string>

#include "sfrkit/errors.hpp"
#include "sfrkit/frequency_trace.hpp"

namespace sfrkit {

namespace {

void require_finite(double value, const char* name) {
  if (!std::isfinite(value)) throw InvalidInput(std::string(name) + " must be finite");
}

void require_time(double t) {
  if (!(t >= 0.0)) throw InvalidInput("time must be non-negative, got " + std::to_string(t));
}

bool same_sign_or_zero(double magnitude, double p_cont) {
  return magnitude == 0.0 || p_cont == 0.0 || (magnitude > 0.0) == (p_cont > 0.0);
}

}  // namespace

DerivedParams derive_params(const SystemConditions& sc) {
  require_finite(sc.f_n_hz, "f_n");
  require_finite(sc.ke_mws, "KE");
  require_finite(sc.p_load_mw, "P_load");
  require_finite(sc.d_relief, "D");
  require_finite(sc.p_cont_mw, "P_cont");
  if (sc.f_n_hz <= 0.0) throw InvalidInput("nominal frequency must be positive");
  if (sc.ke_mws <= 0.0) throw InvalidInput("kinetic energy must be positive");
  if (sc.p_load_mw <= 0.0) throw InvalidInput("system load must be positive");
  if (sc.d_relief < 0.0) throw InvalidInput("load relief factor must be non-negative");
  return {sc.d_relief * sc.p_load_mw, sc.ke_mws / sc.f_n_hz};
}

SfrSystem::SfrSystem(const SystemConditions& sc) : sc_(sc), dp_(derive_params(sc)) {}

void SfrSystem::require_damping() const {
  if (!(dp_.d_prime > 0.0)) throw InvalidInput("closed form needs D' = D * P_load > 0");
}

SfrSystem SfrSystem::with_contingency(double p_cont_mw) const {
  SystemConditions sc = sc_;
  sc.p_cont_mw = p_cont_mw;
  return SfrSystem(sc);
}

void validate(const LagBand& band) {
  require_finite(band.pfr_mw, "band PFR");
  if (!(band.tau_s > 0.0) || !std::isfinite(band.tau_s)) throw InvalidInput("lag time constant must be positive");
}

void validate(const RampBand& band) {
  require_finite(band.pfr_mw, "band PFR");
  if (!(band.t_r_s > 0.0) || !std::isfinite(band.t_r_s)) throw InvalidInput("ramp time must be positive");
}

void validate_band_signs(double p_cont_mw, std::span<const LagBand> bands) {
  for (const auto& band : bands) {
    validate(band);
    if (!same_sign_or_zero(band.pfr_mw, p_cont_mw))
      throw InvalidInput("band magnitude must share the sign of the contingency");
  }
}

void validate_band_signs(double p_cont_mw, std::span<const RampBand> bands) {
  for (const auto& band : bands) {
    validate(band);
    if (!same_sign_or_zero(band.pfr_mw, p_cont_mw))
      throw InvalidInput("band magnitude must share the sign of the contingency");
  }
}

double lag_pfr_value(const LagBand& band, double t) {
  validate(band);
  require_time(t);
  return -band.pfr_mw * std::expm1(-t / band.tau_s);
}

double ramp_pfr_value(const RampBand& band, double t) {
  validate(band);
  require_time(t);
  return t >= band.t_r_s ? band.pfr_mw : band.rate() * t;
}

double two_band_pfr_value(const LagBand& b1, const LagBand& b2, double t) {
  return lag_pfr_value(b1, t) + lag_pfr_value(b2, t);
}

std::size_t TimeGrid::sample_count() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw InvalidInput("time step must be positive");
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw InvalidInput("end time must be positive");
  if (t_end < dt * (1.0 - 1e-12)) throw InvalidInput("end time must be at least one step");
  const double steps = std::floor(t_end / dt + 1e-9);
  if (steps > 1e8) throw InvalidInput("time grid too large");
  return static_cast<std::size_t>(steps) + 1;
}

Eigen::ArrayXd TimeGrid::times() const {
  const auto n = static_cast<Eigen::Index>(sample_count());
  return Eigen::ArrayXd::LinSpaced(n, 0.0, static_cast<double>(n - 1)) * dt;
}

}  // namespace sfrkit
