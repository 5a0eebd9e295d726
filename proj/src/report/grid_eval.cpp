#include "report/grid_eval.hpp"

#include <cmath>

#include "common.hpp"
#include "report/metrics.hpp"

namespace kandae::report {

EvaluationGrid EvaluationGrid::uniform(double t_end, std::size_t n) {
  require(t_end > 0.0, "evaluation grid: t_end must be positive");
  require(n >= 2, "evaluation grid: need at least two points");
  EvaluationGrid g;
  g.times.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    g.times[i] = t_end * static_cast<double>(i) / static_cast<double>(n - 1);
  g.times.back() = t_end;
  return g;
}

std::array<std::vector<double>, 3> driftoff_curves(const net::SolverPair& pair,
                                                   const dae::DaeSystem& system,
                                                   const EvaluationGrid& grid) {
  std::array<std::vector<double>, 3> curves;
  for (auto& c : curves) c.reserve(grid.times.size());
  dae::StateSample sample;
  for (double t : grid.times) {
    const net::SolverPair::Eval e = pair.eval(t);
    sample.t = t;
    sample.u = e.u;
    sample.du = e.du;
    sample.z = e.z;
    for (int level = 1; level <= 3; ++level)
      curves[static_cast<std::size_t>(level - 1)].push_back(
          std::fabs(system.constraint_residual(level, sample)));
  }
  return curves;
}

RunReport evaluate_run(const train::TrainingConfig& cfg, const net::SolverPair& pair,
                       const dae::DaeSystem& system, const train::TrainingTrace& trace) {
  RunReport rep;
  rep.config = cfg;
  rep.variable_names = system.variable_names();
  rep.trace = trace;

  const EvaluationGrid grid = EvaluationGrid::uniform(cfg.t_end, cfg.n_test);
  rep.times = grid.times;

  const std::size_t n_u = system.n_diff();
  const std::size_t n_z = system.n_alg();
  const std::size_t n_var = n_u + n_z;
  rep.exact.assign(n_var, {});
  rep.predicted.assign(n_var, {});
  for (auto& v : rep.exact) v.reserve(grid.times.size());
  for (auto& v : rep.predicted) v.reserve(grid.times.size());

  for (double t : grid.times) {
    const dae::StateSample ex = system.exact_solution(t);
    const net::SolverPair::Eval pr = pair.eval(t);
    for (std::size_t j = 0; j < n_u; ++j) {
      rep.exact[j].push_back(ex.u[j]);
      rep.predicted[j].push_back(pr.u[j]);
    }
    for (std::size_t j = 0; j < n_z; ++j) {
      rep.exact[n_u + j].push_back(ex.z[j]);
      rep.predicted[n_u + j].push_back(pr.z[j]);
    }
  }

  rep.ae.resize(n_var);
  rep.re.resize(n_var);
  for (std::size_t j = 0; j < n_var; ++j) {
    rep.ae[j] = absolute_error_trajectory(rep.exact[j], rep.predicted[j]);
    rep.re[j] = relative_error(rep.exact[j], rep.predicted[j]);
  }

  rep.drift = driftoff_curves(pair, system, grid);
  return rep;
}

}  // namespace kandae::report
