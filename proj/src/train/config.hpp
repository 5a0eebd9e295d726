#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "common.hpp"

namespace kandae::train {

struct LbfgsOptions {
  std::size_t history = 50;
  double c1 = 1e-4;
  double c2 = 0.9;
  int max_line_search = 25;
  double grad_tol = 1e-9;
  double loss_tol = 1e-16;
};

struct TrainingConfig {
  std::string system = "particle";
  int form = 3;
  std::string net = "kan";  // kan | mlp
  std::vector<int> diff_shape = {1, 5, 5, 4};
  std::vector<int> alg_shape = {1, 5, 5, 1};
  int grid_g = 5;
  int grid_k = 3;
  double t_end = 1.0;
  std::size_t n_i = 1;
  std::size_t n_f = 200;
  std::size_t epochs = 24000;
  std::uint64_t seed = 0;
  std::size_t eval_every = 10;
  std::size_t n_test = 1000;
  LbfgsOptions lbfgs;

  void validate() const;
};

// key = value format, '#' comments, shapes as comma-separated integer lists
TrainingConfig parse_config(const std::string& text);
TrainingConfig load_config(const std::string& path);

// full round-trippable echo of every setting, fixed key order
std::string write_config(const TrainingConfig& cfg);

}  // namespace kandae::train
