#include "train/loss.hpp"

#include <cmath>

namespace kandae::train {

using ad::Scalar;

LossEvaluator::LossEvaluator(const net::SolverPair& pair, const dae::DaeSystem& system,
                             dae::IndexForm form, CollocationSet colloc)
    : pair_(pair),
      system_(system),
      form_(form),
      colloc_(std::move(colloc)),
      n_params_(pair.param_count()) {
  require(!colloc_.residual_ts.empty(), "loss: no residual points");
  require(!colloc_.initial.empty(), "loss: no initial points");
  const std::size_t state_len =
      static_cast<std::size_t>(pair.n_u()) + static_cast<std::size_t>(pair.n_z());
  for (const auto& ip : colloc_.initial)
    require(ip.state.size() == state_len, "loss: initial state length mismatch");
  require(system_.n_diff() == static_cast<std::size_t>(pair.n_u()) &&
              system_.n_alg() == static_cast<std::size_t>(pair.n_z()),
          "loss: network output dims do not match the system");
}

LossBreakdown LossEvaluator::value_and_gradient(std::span<const double> x,
                                                std::vector<double>& grad) {
  require(x.size() == n_params_, "loss: parameter vector length mismatch");

  rec_.reset_to(ad::Record::Mark{});
  theta_.clear();
  theta_.reserve(n_params_);
  for (double v : x) theta_.push_back(rec_.parameter(v));
  const ad::Record::Mark mark = rec_.mark();
  rec_.begin_accumulation();

  const std::size_t n_u = static_cast<std::size_t>(pair_.n_u());
  const std::size_t n_z = static_cast<std::size_t>(pair_.n_z());
  const double nf = static_cast<double>(colloc_.residual_ts.size());
  const double ni = static_cast<double>(colloc_.initial.size());

  double sum_f = 0.0;
  std::vector<Scalar> du;
  for (std::size_t i = 0; i < colloc_.residual_ts.size(); ++i) {
    const double t = colloc_.residual_ts[i];
    try {
      rec_.reset_to(mark);
      const Scalar st = rec_.input(t);
      const net::PairOutputs out = pair_.forward(rec_, st, theta_);
      du.clear();
      for (std::size_t j = 0; j < n_u; ++j) du.push_back(ad::tangent_of(out.u[j]));
      system_.residual(form_, st, out.u, du, out.z, residual_);
      point_terms_.clear();
      for (const Scalar& r : residual_) point_terms_.push_back(ad::sq(r));
      const Scalar pt = rec_.sum(point_terms_);
      sum_f += pt.value();
      rec_.backward_suffix(pt, 1.0 / nf, mark);
    } catch (const Error& e) {
      fail("loss: collocation point " + std::to_string(i) + " (t = " + std::to_string(t) +
           "): " + e.what());
    }
  }

  double sum_i = 0.0;
  for (std::size_t i = 0; i < colloc_.initial.size(); ++i) {
    const InitialPoint& ip = colloc_.initial[i];
    try {
      rec_.reset_to(mark);
      const Scalar st = rec_.input(ip.t);
      const net::PairOutputs out = pair_.forward(rec_, st, theta_);
      point_terms_.clear();
      for (std::size_t j = 0; j < n_u; ++j)
        point_terms_.push_back(ad::sq(out.u[j] - ip.state[j]));
      for (std::size_t j = 0; j < n_z; ++j)
        point_terms_.push_back(ad::sq(out.z[j] - ip.state[n_u + j]));
      const Scalar pt = rec_.sum(point_terms_);
      sum_i += pt.value();
      rec_.backward_suffix(pt, 1.0 / ni, mark);
    } catch (const Error& e) {
      fail("loss: initial point " + std::to_string(i) + ": " + e.what());
    }
  }

  grad.resize(n_params_);
  rec_.collect_param_adjoints(grad);

  last_.mse_f = sum_f / nf;
  last_.mse_i = sum_i / ni;
  last_.total = last_.mse_f + last_.mse_i;
  require(std::isfinite(last_.total), "loss: non-finite total");
  return last_;
}

}  // namespace kandae::train
