#include "train/trainer.hpp"

#include <chrono>

namespace kandae::train {

std::unique_ptr<net::SolverPair> build_pair(const TrainingConfig& cfg) {
  const auto& system = dae::system_by_name(cfg.system);
  return std::make_unique<net::SolverPair>(
      net::net_kind_from_string(cfg.net), cfg.diff_shape, cfg.alg_shape,
      static_cast<int>(system.n_diff()), static_cast<int>(system.n_alg()), cfg.t_end,
      cfg.grid_g, cfg.grid_k);
}

TrainResult train(const TrainingConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();

  const auto& system = dae::system_by_name(cfg.system);
  TrainResult result;
  result.pair = build_pair(cfg);
  result.pair->init(cfg.seed);
  result.colloc = sample_collocation(cfg, system);

  LossEvaluator evaluator(*result.pair, system, dae::form_from_int(cfg.form),
                          result.colloc);

  std::vector<double> x = result.pair->parameters();

  if (cfg.epochs == 0) {
    result.trace.status = "epochs";
    result.trace.final_parameters = x;
    result.trace.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  }

  const Objective objective = [&](std::span<const double> p, std::vector<double>& grad) {
    return evaluator.value_and_gradient(p, grad).total;
  };
  const SnapshotFn snapshot = [&](std::size_t iteration, double f, double grad_norm) {
    const LossBreakdown b = evaluator.last();
    result.trace.rows.push_back({iteration, f, b.mse_f, b.mse_i, grad_norm});
  };

  const LbfgsReport report =
      lbfgs_minimize(x, objective, cfg.lbfgs, cfg.epochs, cfg.eval_every, snapshot);

  result.pair->load_parameters(x);
  result.trace.final_parameters = std::move(x);
  result.trace.status = report.status;
  result.trace.iterations = report.iterations;
  result.trace.line_search_failures = report.line_search_failures;
  result.trace.final_loss = report.final_loss;
  result.trace.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace kandae::train
