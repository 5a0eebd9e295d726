#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "train/config.hpp"

namespace kandae::train {

// objective: fills grad (resized by the callee) and returns the value
using Objective = std::function<double(std::span<const double>, std::vector<double>&)>;

// called after the initial evaluation (iteration 0) and per snapshot
using SnapshotFn = std::function<void(std::size_t iteration, double f, double grad_norm)>;

struct LbfgsReport {
  std::size_t iterations = 0;       // outer iterations performed
  std::string status;               // epochs | grad_tol | loss_tol | line_search
  std::size_t line_search_failures = 0;
  double final_loss = 0.0;
  double final_grad_norm = 0.0;
};

// Two-loop-recursion L-BFGS with a strong-Wolfe line search. Falls back to a
// backtracking steepest-descent step when the Wolfe search fails; ten
// consecutive fallback iterations abort the run. Snapshots fire at iteration
// 0, every `eval_every` iterations, and at the final iterate.
LbfgsReport lbfgs_minimize(std::vector<double>& x, const Objective& objective,
                           const LbfgsOptions& opt, std::size_t epochs,
                           std::size_t eval_every, const SnapshotFn& snapshot);

}  // namespace kandae::train
