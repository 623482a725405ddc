#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sfrkit/core_model.hpp"
#include "sfrkit/frequency_trace.hpp"

namespace sfrkit {

/// Parsed scenario file:
///   {"system": {"f_n_hz", "ke_mws", "p_load_mw", "d_relief", "p_cont_mw"},
///    "bands": [{"kind": "lag"|"ramp", "pfr_mw", "tau_s"|"t_r_s"}],
///    "sim": {"t_end_s", "dt_s"}}
struct Scenario {
  SystemConditions system;
  std::vector<LagBand> lag_bands;
  std::vector<RampBand> ramp_bands;
  TimeGrid sim{30.0, 1e-3};
};

/// Parses scenario text, applying `key.path=value` overrides first.
/// Throws InvalidInput with a line/column or field-path diagnostic.
Scenario parse_scenario(std::string_view text, const std::vector<std::string>& overrides = {});

Scenario load_scenario(const std::string& path, const std::vector<std::string>& overrides = {});

}  // namespace sfrkit
