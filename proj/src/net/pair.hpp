#pragma once

#include <memory>

#include "kan.hpp"
#include "mlp.hpp"

namespace kandae::net {

enum class NetKind { kan, mlp };

NetKind net_kind_from_string(const std::string& s);
std::string to_string(NetKind k);

struct PairOutputs {
  std::vector<ad::Scalar> u;  // differential variables
  std::vector<ad::Scalar> z;  // algebraic variables
};

// The solver: for KANs, a differential network (n_u outputs) plus an
// algebraic network (n_z outputs); for the MLP baseline, one network whose
// output is split [u | z]. Parameters concatenate differential-then-algebraic.
class SolverPair {
public:
  SolverPair(NetKind kind, std::vector<int> diff_shape, std::vector<int> alg_shape,
             int n_u, int n_z, double t_end, int grid_g, int grid_k);

  NetKind kind() const { return kind_; }
  int n_u() const { return n_u_; }
  int n_z() const { return n_z_; }
  std::size_t param_count() const;

  void init(std::uint64_t seed);

  PairOutputs forward(ad::Record& rec, const ad::Scalar& t,
                      std::span<const ad::Scalar> theta) const;

  std::vector<double> parameters() const;
  void load_parameters(std::span<const double> v);

  const Network& diff_net() const { return *diff_; }
  const Network* alg_net() const { return alg_.get(); }

  // evaluation with stored parameters: values and time-tangents of (u, z)
  struct Eval {
    std::vector<double> u, du, z, dz;
  };
  Eval eval(double t) const;

private:
  NetKind kind_;
  int n_u_, n_z_;
  std::unique_ptr<bspline::SplineGrid> input_grid_, hidden_grid_;
  std::unique_ptr<Network> diff_, alg_;
};

}  // namespace kandae::net
