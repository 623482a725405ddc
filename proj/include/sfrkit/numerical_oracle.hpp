#pragma once

#include <functional>
#include <span>

#include "sfrkit/core_model.hpp"
#include "sfrkit/frequency_trace.hpp"

namespace sfrkit {

enum class IntegrationMethod { FixedStepRK4, ForwardEuler };

struct IntegrationSpec {
  double dt = 1e-3;
  double t_end = 30.0;
  IntegrationMethod method = IntegrationMethod::FixedStepRK4;
};

/// Stateless PFR function of time, MW.
using PfrFunction = std::function<double(double)>;

/// Sum of the given bands; ramps saturate at their magnitude.
PfrFunction make_pfr_function(std::span<const LagBand> lag_bands, std::span<const RampBand> ramp_bands);

/// Fixed-step integration of dDf/dt = (p(t) - P_cont - D' Df) / 2H from Df(0) = 0.
/// D' may be zero here (pure inertia). Requires 0 < dt <= 0.01 and t_end >= dt.
FrequencyTrace integrate(const SfrSystem& sys, const PfrFunction& pfr, const IntegrationSpec& spec);

struct TraceExtremum {
  double t_s = 0.0;
  double delta_f_hz = 0.0;
};

/// Extreme sample of the trace on its own grid: the minimum when the final
/// deviation is negative, the maximum when it is positive. Earliest on ties.
TraceExtremum trace_nadir(const FrequencyTrace& trace);

}  // namespace sfrkit
