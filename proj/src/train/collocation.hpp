#pragma once

#include <vector>

#include "dae/system.hpp"
#include "train/config.hpp"

namespace kandae::train {

struct InitialPoint {
  double t;
  std::vector<double> state;  // differential then algebraic values
};

struct CollocationSet {
  std::vector<InitialPoint> initial;
  std::vector<double> residual_ts;  // ascending, uniform over [0, T]
};

CollocationSet sample_collocation(const TrainingConfig& cfg, const dae::DaeSystem& system);

}  // namespace kandae::train
