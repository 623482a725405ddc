#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "sfrkit/errors.hpp"

namespace sfrkit {

struct LmOptions {
  double initial_damping = 1e-3;
  double damping_factor = 10.0;
  double relative_cost_tolerance = 1e-10;
  int max_iterations = 200;  ///< counts every trial step, accepted or not
};

template <typename Scalar, int NParams>
struct LmResult {
  Eigen::Matrix<Scalar, NParams, 1> params;
  Scalar cost = 0;  ///< sum of squared residuals
  int iterations = 0;
};

/**
 * Bound-constrained Levenberg-Marquardt for small dense problems.
 *
 * `problem(x, r, J)` fills the residual vector `r` (resized by the callee)
 * and the Jacobian `J` (rows = residuals, NParams columns). Bounds are
 * enforced by clipping every trial point. The damping matrix is Marquardt's
 * diag(J^T J) with a floor so that a vanishing column does not make the
 * augmented system singular.
 *
 * The iteration schedule is fixed, so identical inputs give bitwise-identical
 * results. Throws FitFailure carrying the best iterate when the budget runs out.
 */
template <typename Scalar, int NParams, typename Problem>
LmResult<Scalar, NParams> levenberg_marquardt(Problem&& problem,
                                              Eigen::Matrix<Scalar, NParams, 1> x0,
                                              const Eigen::Matrix<Scalar, NParams, 1>& lower,
                                              const Eigen::Matrix<Scalar, NParams, 1>& upper,
                                              const LmOptions& options = {}) {
  using Param = Eigen::Matrix<Scalar, NParams, 1>;
  using Normal = Eigen::Matrix<Scalar, NParams, NParams>;
  using Residual = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Jacobian = Eigen::Matrix<Scalar, Eigen::Dynamic, NParams>;

  auto clip = [&](const Param& x) -> Param { return x.cwiseMax(lower).cwiseMin(upper); };

  Param x = clip(x0);
  Residual r;
  Jacobian jac;
  problem(x, r, jac);
  Scalar cost = r.squaredNorm();
  Scalar lambda = static_cast<Scalar>(options.initial_damping);

  LmResult<Scalar, NParams> result;
  Residual r_trial;
  Jacobian jac_trial;

  for (int iter = 0; iter < options.max_iterations; ++iter) {
    result.iterations = iter + 1;
    if (cost == Scalar(0)) {
      result.params = x;
      result.cost = cost;
      return result;
    }

    const Normal jtj = jac.transpose() * jac;
    const Param gradient = jac.transpose() * r;
    Param scale = jtj.diagonal();
    const Scalar floor = std::max(scale.maxCoeff(), Scalar(1)) * std::numeric_limits<Scalar>::epsilon();
    scale = scale.cwiseMax(floor);

    Normal augmented = jtj;
    augmented.diagonal() += lambda * scale;
    const Param step = augmented.ldlt().solve(-gradient);
    const Param x_trial = clip(x + step);

    problem(x_trial, r_trial, jac_trial);
    const Scalar cost_trial = r_trial.squaredNorm();

    if (std::isfinite(cost_trial) && cost_trial < cost) {
      const Scalar decrease = cost - cost_trial;
      x = x_trial;
      r.swap(r_trial);
      jac.swap(jac_trial);
      cost = cost_trial;
      lambda /= static_cast<Scalar>(options.damping_factor);
      if (decrease < static_cast<Scalar>(options.relative_cost_tolerance) * (cost + decrease)) {
        result.params = x;
        result.cost = cost;
        return result;
      }
    } else {
      lambda *= static_cast<Scalar>(options.damping_factor);
      // No descent direction left at machine precision: x is stationary.
      if (lambda > Scalar(1e16) || (x_trial - x).norm() == Scalar(0)) {
        result.params = x;
        result.cost = cost;
        return result;
      }
    }
  }

  std::vector<double> best(x.data(), x.data() + x.size());
  throw FitFailure("Levenberg-Marquardt did not converge in " + std::to_string(options.max_iterations) +
                       " iterations",
                   std::move(best), static_cast<double>(cost));
}

}  // namespace sfrkit
