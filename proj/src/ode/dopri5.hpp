#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "common.hpp"

namespace kandae::ode {

struct OdeProblem {
  std::size_t dimension = 0;
  // rhs(t, y, dy): fills dy with f(t, y); must be pure
  std::function<void(double, std::span<const double>, std::span<double>)> rhs;
  std::vector<double> y0;
  double t0 = 0.0;
  double t1 = 1.0;
};

struct IntegratorSettings {
  double rtol = 1e-8;
  double atol = 1e-8;
  double initial_step = 0.0;  // 0 = pick automatically from f(t0, y0)
  double max_step = 0.0;      // 0 = no cap beyond the remaining span
  std::size_t max_steps = 1000000;
  double safety = 0.9;
};

struct Trajectory {
  std::vector<double> times;                 // accepted times, strictly increasing
  std::vector<std::vector<double>> states;   // one state per accepted time
  std::size_t rejected_steps = 0;
  std::size_t rhs_evals = 0;
};

// thrown when integration aborts; carries what was accepted so far
class IntegrationError : public Error {
 public:
  IntegrationError(const std::string& msg, Trajectory partial_traj)
      : Error(msg), partial(std::move(partial_traj)) {}
  Trajectory partial;
};

// Dormand-Prince 5(4) with FSAL: one RHS evaluation up front, then six per
// attempted step. Elementary step-size control, no PI filter.
Trajectory integrate(const OdeProblem& problem, const IntegratorSettings& settings);

}  // namespace kandae::ode
