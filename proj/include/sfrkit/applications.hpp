#pragma once

#include "sfrkit/band_approx.hpp"
#include "sfrkit/core_model.hpp"

namespace sfrkit {

/// Dimensionless groups of the lag nadir expression.
struct NadirConstants {
  double k = 0.0;  ///< P_cont / PFR
  double a = 0.0;  ///< D' tau / 2H
  double b = 0.0;  ///< 1 + K (A - 1)
  double c = 0.0;  ///< A / (A - 1); infinite when A = 1
  bool singular_a = false;  ///< |A - 1| within tolerance
  bool asymptotic = false;  ///< B <= eps: no interior nadir
};

NadirConstants nadir_constants(double a, double k);
NadirConstants nadir_constants(const SfrSystem& sys, double pfr_mw, double tau_s);

/// Minimum-PFR policy: PFR >= P_cont / K, and the deviation limit.
struct SecurityPolicy {
  double k_policy = 1.0 / 0.7;
  double delta_f_max_hz = -1.25;
};

/// Largest contingency whose nadir just reaches delta_f_max while PFR = P_cont/K.
/// A depends only on tau, H and D', so no iteration on P_cont is needed.
/// At the asymptotic boundary (B = 0) returns the asymptotic cap; inside the
/// asymptotic region throws BranchError pointing at asymptotic_max_contingency.
double max_contingency(const DerivedParams& dp, const SecurityPolicy& policy, double tau_s);

/// f(A, K) with P_cont <= f(A, K) D'. Throws BranchError when A < 1 - 1/K.
double universal_max_contingency_factor(double a, double k, double delta_f_max_hz);

/// Cap from the settling value: delta_f_max / (1/K - 1) * D'.
/// Throws BranchError for K <= 1 (no finite cap).
double asymptotic_max_contingency(const DerivedParams& dp, double k_policy, double delta_f_max_hz);

/// (1 - 1/K) 2H/D': below this tau the nadir no longer improves. Clamped at 0.
double min_effective_tau(const DerivedParams& dp, double k);

/// K = 1 case: -D' delta_f_max A^(1/(A-1)); continuous through A = 1 (limit e).
double special_case_max_contingency(const DerivedParams& dp, double delta_f_max_hz, double tau_s);

struct PcontSensitivity {
  double dp_dtau = 0.0;  ///< MW/s
  double dp_dh = 0.0;    ///< MW per MW.s/Hz
};

/// Partial derivatives of the K = 1 cap with respect to tau and H.
PcontSensitivity sensitivity_pcont(const DerivedParams& dp, double delta_f_max_hz, double tau_s);

struct TauBandSensitivity {
  double dtau_dpfr1 = 0.0;  ///< s/MW
  double dtau_dpfr2 = 0.0;  ///< s/MW
};

/// Partial derivatives of the surface model with respect to the band magnitudes.
TauBandSensitivity sensitivity_tau_bands(const TauSurfaceModel& model, double pfr1_mw, double pfr2_mw);

struct PcontBandSensitivity {
  double dp_dpfr1 = 0.0;
  double dp_dpfr2 = 0.0;
};

/// Chain rule through tau only: dP/dPFRi = dP/dtau * dtau/dPFRi, at tau = tau'(PFR1, PFR2).
PcontBandSensitivity sensitivity_pcont_bands(const DerivedParams& dp, double delta_f_max_hz,
                                             const TauSurfaceModel& model, double pfr1_mw, double pfr2_mw);

/// Central finite difference of max_contingency with respect to K_policy.
double max_contingency_dk(const DerivedParams& dp, const SecurityPolicy& policy, double tau_s,
                          double relative_step = 1e-6);

/// FFR share PFR1 / (PFR1 + PFR2) that gives an equivalent tau of `tau_target_s`.
/// Attainable range is [tau1, tau1 + a); outside it throws BranchError.
double required_ffr_share(const TauSurfaceModel& model, double tau_target_s);

}  // namespace sfrkit
