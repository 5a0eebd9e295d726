#include "ode/driftoff.hpp"

#include <cmath>

#include "dae/system.hpp"

namespace kandae::ode {

DriftTable pendulum_driftoff(const IntegratorSettings& settings, double horizon) {
  require(horizon > 0.0, "driftoff: horizon must be positive");

  OdeProblem problem;
  problem.dimension = 4;
  problem.rhs = [](double t, std::span<const double> y, std::span<double> dy) {
    kandae::dae::pendulum_index1_rhs(t, y, dy);
  };
  problem.y0 = {1.0, 0.0, 0.0, 0.0};
  problem.t0 = 0.0;
  problem.t1 = horizon;

  const Trajectory traj = integrate(problem, settings);

  DriftTable table;
  table.rejected_steps = traj.rejected_steps;
  table.rhs_evals = traj.rhs_evals;
  table.rows.reserve(traj.times.size());
  for (std::size_t i = 0; i < traj.times.size(); ++i) {
    const auto& s = traj.states[i];
    table.rows.push_back({traj.times[i],
                          std::abs(s[0] * s[0] + s[1] * s[1] - 1.0),
                          std::abs(s[0] * s[2] + s[1] * s[3])});
  }
  return table;
}

}  // namespace kandae::ode
