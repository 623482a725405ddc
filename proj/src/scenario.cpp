#include "sfrkit/scenario.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "sfrkit/errors.hpp"

namespace sfrkit {

namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& path, const std::string& problem) {
  throw InvalidInput("scenario field '" + path + "': " + problem);
}

const json& require_object(const json& parent, const std::string& key, const std::string& path) {
  if (!parent.contains(key)) field_error(path, "missing");
  const json& value = parent.at(key);
  if (!value.is_object()) field_error(path, "must be an object");
  return value;
}

double number_field(const json& parent, const std::string& key, const std::string& path,
                    const double* fallback = nullptr) {
  if (!parent.contains(key)) {
    if (fallback) return *fallback;
    field_error(path, "missing");
  }
  const json& value = parent.at(key);
  if (!value.is_number()) field_error(path, "must be a number");
  return value.get<double>();
}

json::json_pointer dotted_to_pointer(const std::string& dotted) {
  std::string pointer;
  std::stringstream ss(dotted);
  for (std::string part; std::getline(ss, part, '.');) {
    if (part.empty()) throw InvalidInput("override path '" + dotted + "' has an empty component");
    pointer += "/" + part;
  }
  return json::json_pointer(pointer);
}

void apply_override(json& doc, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) throw InvalidInput("override '" + assignment + "' must look like key.path=value");
  const std::string path = assignment.substr(0, eq);
  const std::string text = assignment.substr(eq + 1);
  json value = json::parse(text, nullptr, false);
  if (value.is_discarded()) value = text;
  try {
    doc[dotted_to_pointer(path)] = std::move(value);
  } catch (const json::exception& e) {
    throw InvalidInput("override '" + assignment + "': " + e.what());
  }
}

}  // namespace

Scenario parse_scenario(std::string_view text, const std::vector<std::string>& overrides) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("scenario JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("scenario JSON: top level must be an object");
  for (const auto& assignment : overrides) apply_override(doc, assignment);

  Scenario scenario;
  const json& system = require_object(doc, "system", "system");
  const double default_fn = 50.0;
  scenario.system.f_n_hz = number_field(system, "f_n_hz", "system.f_n_hz", &default_fn);
  scenario.system.ke_mws = number_field(system, "ke_mws", "system.ke_mws");
  scenario.system.p_load_mw = number_field(system, "p_load_mw", "system.p_load_mw");
  scenario.system.d_relief = number_field(system, "d_relief", "system.d_relief");
  scenario.system.p_cont_mw = number_field(system, "p_cont_mw", "system.p_cont_mw");

  if (doc.contains("bands")) {
    const json& bands = doc.at("bands");
    if (!bands.is_array()) field_error("bands", "must be an array");
    for (std::size_t i = 0; i < bands.size(); ++i) {
      const std::string path = "bands." + std::to_string(i);
      const json& band = bands[i];
      if (!band.is_object()) field_error(path, "must be an object");
      if (!band.contains("kind") || !band.at("kind").is_string()) field_error(path + ".kind", "must be \"lag\" or \"ramp\"");
      const auto kind = band.at("kind").get<std::string>();
      const double pfr = number_field(band, "pfr_mw", path + ".pfr_mw");
      if (kind == "lag") {
        scenario.lag_bands.push_back({pfr, number_field(band, "tau_s", path + ".tau_s")});
      } else if (kind == "ramp") {
        scenario.ramp_bands.push_back({pfr, number_field(band, "t_r_s", path + ".t_r_s")});
      } else {
        field_error(path + ".kind", "must be \"lag\" or \"ramp\", got \"" + kind + "\"");
      }
    }
  }

  if (doc.contains("sim")) {
    const json& sim = require_object(doc, "sim", "sim");
    const double t_end = scenario.sim.t_end, dt = scenario.sim.dt;
    scenario.sim.t_end = number_field(sim, "t_end_s", "sim.t_end_s", &t_end);
    scenario.sim.dt = number_field(sim, "dt_s", "sim.dt_s", &dt);
  }

  derive_params(scenario.system);
  validate_band_signs(scenario.system.p_cont_mw, scenario.lag_bands);
  validate_band_signs(scenario.system.p_cont_mw, scenario.ramp_bands);
  scenario.sim.sample_count();
  return scenario;
}

Scenario load_scenario(const std::string& path, const std::vector<std::string>& overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str(), overrides);
}

}  // namespace sfrkit
