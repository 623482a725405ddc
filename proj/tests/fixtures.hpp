#pragma once

#include <cmath>
#include <random>

#include "sfrkit/core_model.hpp"

namespace fixtures {

// P_cont = 300 MW, KE = 9000 MW.s, P_load = 2000 MW, D = 0.04: D' = 80, H = 180.
inline sfrkit::SystemConditions reference_conditions() { return {50.0, 9000.0, 2000.0, 0.04, 300.0}; }
inline sfrkit::SfrSystem reference_system() { return sfrkit::SfrSystem(reference_conditions()); }

// KE = 7000 MW.s, P_load = 2500 MW, D = 0.04: D' = 100, H = 140.
inline sfrkit::DerivedParams contingency_params() { return {100.0, 140.0}; }

inline double rel_err(double value, double reference) {
  return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

inline std::mt19937_64 rng(std::uint64_t seed = 20240611) { return std::mt19937_64(seed); }

inline double uniform(std::mt19937_64& gen, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(gen);
}

}  // namespace fixtures
