#pragma once

#include <Eigen/Core>
#include <cstddef>

namespace sfrkit {

/// Uniformly sampled time grid [0, t_end] with step dt. Sample i sits at
/// exactly i * dt (never accumulated).
struct TimeGrid {
  double t_end = 30.0;
  double dt = 1e-3;

  /// Number of samples including t = 0. Throws InvalidInput for a bad grid.
  std::size_t sample_count() const;
  Eigen::ArrayXd times() const;
};

/// Frequency deviation samples on a uniform grid, Hz.
struct FrequencyTrace {
  double t0 = 0.0;
  double dt = 1e-3;
  Eigen::VectorXd samples;

  std::size_t size() const noexcept { return static_cast<std::size_t>(samples.size()); }
  double time_at(std::size_t i) const noexcept { return t0 + static_cast<double>(i) * dt; }
};

}  // namespace sfrkit
