#pragma once

#include <vector>

#include "ode/dopri5.hpp"

namespace kandae::ode {

struct DriftRow {
  double t;
  double c3;  // |x^2 + y^2 - 1|
  double c2;  // |x u + y v|
};

struct DriftTable {
  std::vector<DriftRow> rows;  // one per accepted step
  std::size_t rejected_steps = 0;
  std::size_t rhs_evals = 0;
};

// Integrates the pendulum's index-1 form reduced to an ODE (multiplier
// eliminated) and reports how far the numerical solution drifts from the
// position- and velocity-level constraints of the original problem.
DriftTable pendulum_driftoff(const IntegratorSettings& settings, double horizon);

}  // namespace kandae::ode
