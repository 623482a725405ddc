#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace sfrkit {

/// Inputs that violate a type invariant or an operation precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The requested analytic branch does not exist for these inputs (e.g. the
/// nadir is asymptotic, or a cap is unbounded). The message names the branch
/// the caller should use instead.
class BranchError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A least-squares fit ran out of iterations. Carries the best iterate seen.
class FitFailure : public std::runtime_error {
 public:
  FitFailure(const std::string& what, std::vector<double> best_params, double best_cost)
      : std::runtime_error(what), best_params_(std::move(best_params)), best_cost_(best_cost) {}

  const std::vector<double>& best_params() const noexcept { return best_params_; }
  double best_cost() const noexcept { return best_cost_; }

 private:
  std::vector<double> best_params_;
  double best_cost_;
};

}  // namespace sfrkit
