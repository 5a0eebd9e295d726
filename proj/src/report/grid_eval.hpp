#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "dae/system.hpp"
#include "net/pair.hpp"
#include "train/config.hpp"
#include "train/trainer.hpp"

namespace kandae::report {

struct EvaluationGrid {
  std::vector<double> times;

  // n uniform points on [0, t_end], both endpoints included
  static EvaluationGrid uniform(double t_end, std::size_t n);
};

struct RunReport {
  train::TrainingConfig config;
  std::vector<std::string> variable_names;
  std::vector<double> times;
  std::vector<std::vector<double>> exact;      // [variable][time]
  std::vector<std::vector<double>> predicted;  // [variable][time]
  std::vector<std::vector<double>> ae;         // [variable][time]
  std::vector<double> re;                      // [variable]
  std::array<std::vector<double>, 3> drift;    // [level-1][time], |c_level|
  train::TrainingTrace trace;
};

// |constraint_residual| at levels 1..3 along the grid, evaluated on the
// network solution (positions, time-tangents, multiplier)
std::array<std::vector<double>, 3> driftoff_curves(const net::SolverPair& pair,
                                                   const dae::DaeSystem& system,
                                                   const EvaluationGrid& grid);

RunReport evaluate_run(const train::TrainingConfig& cfg, const net::SolverPair& pair,
                       const dae::DaeSystem& system, const train::TrainingTrace& trace);

}  // namespace kandae::report
