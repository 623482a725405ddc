#pragma once

#include <Eigen/Core>
#include <span>

namespace sfrkit {

/// Grid state at the instant of the contingency.
///
/// `d_relief` is a plain fraction of load per Hz (0.04 means D' = 0.04 * P_load).
/// A positive `p_cont_mw` is a generation loss (under-frequency event); over-
/// frequency events use a negative contingency and negative band magnitudes.
struct SystemConditions {
  double f_n_hz = 50.0;
  double ke_mws = 0.0;
  double p_load_mw = 0.0;
  double d_relief = 0.0;
  double p_cont_mw = 0.0;
};

struct DerivedParams {
  double d_prime = 0.0;  ///< load damping D' = D * P_load, MW/Hz
  double inertia = 0.0;  ///< H = KE / f_n, MW.s/Hz
};

/// Validates the conditions and returns D' and H.
/// Throws InvalidInput for non-positive f_n, KE or P_load, or negative D.
DerivedParams derive_params(const SystemConditions& sc);

/// Validated conditions bundled with their derived parameters.
class SfrSystem {
 public:
  explicit SfrSystem(const SystemConditions& sc);

  const SystemConditions& conditions() const noexcept { return sc_; }
  const DerivedParams& derived() const noexcept { return dp_; }

  double p_cont() const noexcept { return sc_.p_cont_mw; }
  double d_prime() const noexcept { return dp_.d_prime; }
  double inertia() const noexcept { return dp_.inertia; }

  /// Decay rate of the homogeneous solution, D'/2H in 1/s.
  double damping_rate() const noexcept { return dp_.d_prime / (2.0 * dp_.inertia); }

  /// Throws InvalidInput when D' is zero; every closed form divides by it.
  void require_damping() const;

  SfrSystem with_contingency(double p_cont_mw) const;

 private:
  SystemConditions sc_;
  DerivedParams dp_;
};

/// First-order lag provider: p(t) = pfr * (1 - exp(-t / tau)).
struct LagBand {
  double pfr_mw = 0.0;
  double tau_s = 1.0;
};

/// Linear ramp provider reaching `pfr_mw` at `t_r_s`.
struct RampBand {
  double pfr_mw = 0.0;
  double t_r_s = 1.0;

  double rate() const noexcept { return pfr_mw / t_r_s; }
};

void validate(const LagBand& band);
void validate(const RampBand& band);

/// Throws InvalidInput unless every band magnitude shares the sign of the
/// contingency (zero magnitudes are accepted).
void validate_band_signs(double p_cont_mw, std::span<const LagBand> bands);
void validate_band_signs(double p_cont_mw, std::span<const RampBand> bands);

double lag_pfr_value(const LagBand& band, double t);

/// Clamped at `pfr_mw` after the ramp time. The ramp closed form does not
/// clamp; only the numerical oracle sees the saturation.
double ramp_pfr_value(const RampBand& band, double t);

double two_band_pfr_value(const LagBand& b1, const LagBand& b2, double t);

/// Vectorised lag response over a time grid (no sign checks on t).
template <typename Derived>
Eigen::ArrayXd lag_pfr_values(const LagBand& band, const Eigen::ArrayBase<Derived>& t) {
  return band.pfr_mw * (1.0 - (-t / band.tau_s).exp());
}

}  // namespace sfrkit
