#pragma once

#include <memory>

#include "train/collocation.hpp"
#include "train/lbfgs.hpp"
#include "train/loss.hpp"

namespace kandae::train {

struct TraceRow {
  std::size_t iteration;
  double loss_total;
  double mse_f;
  double mse_i;
  double grad_norm;
};

struct TrainingTrace {
  std::vector<TraceRow> rows;  // iterations strictly increasing
  std::vector<double> final_parameters;
  double wall_seconds = 0.0;
  std::string status;
  std::size_t iterations = 0;
  std::size_t line_search_failures = 0;
  double final_loss = 0.0;
};

struct TrainResult {
  TrainingTrace trace;
  std::unique_ptr<net::SolverPair> pair;  // carries the trained parameters
  CollocationSet colloc;
};

std::unique_ptr<net::SolverPair> build_pair(const TrainingConfig& cfg);

// Initializes the networks from cfg.seed, samples collocation data, and runs
// L-BFGS on the physics-informed loss. epochs == 0 returns the initialized
// networks with an empty trace body.
TrainResult train(const TrainingConfig& cfg);

}  // namespace kandae::train
