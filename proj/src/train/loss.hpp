#pragma once

#include <span>
#include <vector>

#include "ad/record.hpp"
#include "dae/system.hpp"
#include "net/pair.hpp"
#include "train/collocation.hpp"

namespace kandae::train {

struct LossBreakdown {
  double total = 0.0;
  double mse_f = 0.0;
  double mse_i = 0.0;
};

// Physics-informed loss over a fixed collocation set:
//   mse_f: mean over residual points of the squared 2-norm of the DAE
//          residual with u' taken from the network time-tangent
//   mse_i: mean over initial points of the squared 2-norm of the full
//          predicted state minus the given state
// The gradient spans the concatenated parameters of both networks. Summation
// order is fixed (residual points ascending, then initial points), so repeat
// evaluations are bit-identical.
class LossEvaluator {
 public:
  LossEvaluator(const net::SolverPair& pair, const dae::DaeSystem& system,
                dae::IndexForm form, CollocationSet colloc);

  std::size_t dim() const { return n_params_; }
  const CollocationSet& collocation() const { return colloc_; }

  // evaluates at x; writes the gradient (resized to dim())
  LossBreakdown value_and_gradient(std::span<const double> x, std::vector<double>& grad);

  LossBreakdown last() const { return last_; }

 private:
  const net::SolverPair& pair_;
  const dae::DaeSystem& system_;
  dae::IndexForm form_;
  CollocationSet colloc_;
  std::size_t n_params_;
  ad::Record rec_;
  LossBreakdown last_;
  std::vector<ad::Scalar> theta_;
  std::vector<ad::Scalar> residual_;
  std::vector<ad::Scalar> point_terms_;
};

}  // namespace kandae::train
