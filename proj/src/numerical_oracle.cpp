#include "sfrkit/numerical_oracle.hpp"

#include <cmath>
#include <vector>

#include "sfrkit/errors.hpp"

namespace sfrkit {

PfrFunction make_pfr_function(std::span<const LagBand> lag_bands, std::span<const RampBand> ramp_bands) {
  for (const auto& band : lag_bands) validate(band);
  for (const auto& band : ramp_bands) validate(band);
  return [lags = std::vector<LagBand>(lag_bands.begin(), lag_bands.end()),
          ramps = std::vector<RampBand>(ramp_bands.begin(), ramp_bands.end())](double t) {
    double p = 0.0;
    for (const auto& band : lags) p -= band.pfr_mw * std::expm1(-t / band.tau_s);
    for (const auto& band : ramps) p += t >= band.t_r_s ? band.pfr_mw : band.rate() * t;
    return p;
  };
}

FrequencyTrace integrate(const SfrSystem& sys, const PfrFunction& pfr, const IntegrationSpec& spec) {
  if (!(spec.dt > 0.0 && spec.dt <= 0.01)) throw InvalidInput("integration step must lie in (0, 0.01] s");
  if (!(spec.t_end >= spec.dt)) throw InvalidInput("integration end time must be at least one step");
  if (!pfr) throw InvalidInput("PFR function is empty");

  const std::size_t n = TimeGrid{spec.t_end, spec.dt}.sample_count();
  const double h = spec.dt;
  const double inv_2h = 1.0 / (2.0 * sys.inertia());
  const double dp = sys.d_prime();
  const double p_cont = sys.p_cont();
  auto slope = [&](double t, double df) { return inv_2h * (pfr(t) - p_cont - dp * df); };

  FrequencyTrace trace{0.0, h, Eigen::VectorXd(static_cast<Eigen::Index>(n))};
  double df = 0.0;
  trace.samples[0] = df;
  for (std::size_t i = 1; i < n; ++i) {
    const double t = static_cast<double>(i - 1) * h;
    if (spec.method == IntegrationMethod::ForwardEuler) {
      df += h * slope(t, df);
    } else {
      const double k1 = slope(t, df);
      const double k2 = slope(t + 0.5 * h, df + 0.5 * h * k1);
      const double k3 = slope(t + 0.5 * h, df + 0.5 * h * k2);
      const double k4 = slope(t + h, df + h * k3);
      df += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    trace.samples[static_cast<Eigen::Index>(i)] = df;
  }
  return trace;
}

TraceExtremum trace_nadir(const FrequencyTrace& trace) {
  if (trace.size() == 0) return {};
  const auto& s = trace.samples;
  const bool over_frequency = s[s.size() - 1] > 0.0;
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < s.size(); ++i) {
    if (over_frequency ? s[i] > s[best] : s[i] < s[best]) best = i;
  }
  return {trace.time_at(static_cast<std::size_t>(best)), s[best]};
}

}  // namespace sfrkit
