#pragma once

#include <optional>
#include <span>

#include "sfrkit/core_model.hpp"
#include "sfrkit/frequency_trace.hpp"

namespace sfrkit {

/// Relative threshold for the removable singularities D'tau = 2H and A = 1,
/// and for the asymptotic boundary B = 0.
inline constexpr double kSingularityEps = 1e-9;

enum class NadirKind { InteriorMinimum, Asymptotic };

struct NadirResult {
  NadirKind kind = NadirKind::Asymptotic;
  std::optional<double> t_nadir_s;  ///< only for InteriorMinimum
  double delta_f_nadir_hz = 0.0;
  double max_rocof_hz_per_s = 0.0;
};

// Ramp response. Exact only while every band is still ramping (t <= min t_r).
double ramp_delta_f(const SfrSystem& sys, const RampBand& band, double t);
double multi_ramp_delta_f(const SfrSystem& sys, std::span<const RampBand> bands, double t);

// Lag response, exact for all t.
double lag_delta_f(const SfrSystem& sys, const LagBand& band, double t);
double multi_lag_delta_f(const SfrSystem& sys, std::span<const LagBand> bands, double t);

/// True when the lag response has an interior frequency minimum, i.e.
/// PFR > P_cont (1 - D'tau/2H). The boundary itself counts as asymptotic.
bool nadir_solvable(const SfrSystem& sys, const LagBand& band);

/// Time of the interior minimum, tau ln(B) / (A - 1) (K tau in the A = 1 limit).
/// Throws BranchError when the response is asymptotic.
double lag_nadir_time(const SfrSystem& sys, const LagBand& band);

/// Deviation at the interior minimum. Throws BranchError when asymptotic.
double lag_nadir_deviation(const SfrSystem& sys, const LagBand& band);

/// Settling value (PFR - P_cont)/D', the nadir of an asymptotic response.
double asymptotic_nadir(const SfrSystem& sys, double total_pfr_mw);

/// -P_cont / 2H, reached at t = 0.
double max_rocof(const SfrSystem& sys);

/// Classifies the single-band lag response and fills in the matching nadir.
NadirResult lag_nadir(const SfrSystem& sys, const LagBand& band);

/// Bracket of the nadir expression normalised by PFR/D':
///   (C + K - 1) B^-C - C B^(-C/A) - K + 1  ==  1 - K - B^(1/(1-A)),
/// evaluated in the second (cancellation-free) form. Requires B > 0 unless
/// B is within kSingularityEps of zero, where B^(...) is taken as 0.
double nadir_bracket(double a, double k);

/// Closed-form samples at t = 0, dt, 2dt, ... up to t_end.
FrequencyTrace lag_trace(const SfrSystem& sys, std::span<const LagBand> bands, const TimeGrid& grid);
FrequencyTrace ramp_trace(const SfrSystem& sys, std::span<const RampBand> bands, const TimeGrid& grid);

}  // namespace sfrkit
