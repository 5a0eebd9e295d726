#include "pair.hpp"

namespace kandae::net {

NetKind net_kind_from_string(const std::string& s) {
  if (s == "kan") return NetKind::kan;
  if (s == "mlp") return NetKind::mlp;
  fail("unknown net kind '" + s + "' (expected kan or mlp)");
}

std::string to_string(NetKind k) { return k == NetKind::kan ? "kan" : "mlp"; }

SolverPair::SolverPair(NetKind kind, std::vector<int> diff_shape,
                       std::vector<int> alg_shape, int n_u, int n_z,
                       double t_end, int grid_g, int grid_k)
    : kind_(kind), n_u_(n_u), n_z_(n_z) {
  require(n_u >= 1 && n_z >= 0, "bad variable counts");
  if (kind_ == NetKind::kan) {
    input_grid_ = std::make_unique<bspline::SplineGrid>(
        bspline::SplineGrid::make(0.0, t_end, grid_g, grid_k));
    hidden_grid_ = std::make_unique<bspline::SplineGrid>(
        bspline::SplineGrid::make(-1.0, 1.0, grid_g, grid_k));
    require(!diff_shape.empty() && diff_shape.back() == n_u,
            "differential net output dimension must equal the differential variable count");
    require(!alg_shape.empty() && alg_shape.back() == n_z,
            "algebraic net output dimension must equal the algebraic variable count");
    diff_ = std::make_unique<KanNetwork>(std::move(diff_shape), input_grid_.get(),
                                         hidden_grid_.get());
    alg_ = std::make_unique<KanNetwork>(std::move(alg_shape), input_grid_.get(),
                                        hidden_grid_.get());
  } else {
    require(!diff_shape.empty() && diff_shape.back() == n_u + n_z,
            "MLP output dimension must equal the total variable count");
    diff_ = std::make_unique<MlpNetwork>(std::move(diff_shape));
  }
}

std::size_t SolverPair::param_count() const {
  return diff_->param_count() + (alg_ ? alg_->param_count() : 0);
}

void SolverPair::init(std::uint64_t seed) {
  Rng rng(seed);
  diff_->init(rng);
  if (alg_) alg_->init(rng);
}

PairOutputs SolverPair::forward(ad::Record& rec, const ad::Scalar& t,
                                std::span<const ad::Scalar> theta) const {
  require(theta.size() == param_count(), "SolverPair forward: wrong parameter count");
  PairOutputs out;
  if (alg_) {
    out.u = diff_->forward(rec, t, theta.first(diff_->param_count()));
    out.z = alg_->forward(rec, t, theta.subspan(diff_->param_count()));
  } else {
    std::vector<ad::Scalar> all = diff_->forward(rec, t, theta);
    out.u.assign(all.begin(), all.begin() + n_u_);
    out.z.assign(all.begin() + n_u_, all.end());
  }
  return out;
}

std::vector<double> SolverPair::parameters() const {
  std::vector<double> v(diff_->parameters().begin(), diff_->parameters().end());
  if (alg_) v.insert(v.end(), alg_->parameters().begin(), alg_->parameters().end());
  return v;
}

void SolverPair::load_parameters(std::span<const double> v) {
  require(v.size() == param_count(), "load_parameters: length mismatch");
  diff_->load_parameters(v.first(diff_->param_count()));
  if (alg_) alg_->load_parameters(v.subspan(diff_->param_count()));
}

SolverPair::Eval SolverPair::eval(double t) const {
  ad::Record rec;
  std::vector<ad::Scalar> theta;
  theta.reserve(param_count());
  for (double v : parameters()) theta.push_back(ad::Scalar(v));
  const ad::Scalar ts = rec.input(t);
  const PairOutputs out = forward(rec, ts, theta);
  Eval e;
  for (const ad::Scalar& s : out.u) {
    e.u.push_back(s.value());
    e.du.push_back(s.tangent());
  }
  for (const ad::Scalar& s : out.z) {
    e.z.push_back(s.value());
    e.dz.push_back(s.tangent());
  }
  return e;
}

}  // namespace kandae::net
