#pragma once

#include <span>
#include <vector>

#include "../ad/record.hpp"
#include "../common.hpp"
#include "../rng.hpp"

namespace kandae::net {

struct ValueTangent {
  std::vector<double> value;
  std::vector<double> tangent;
};

class Network {
public:
  virtual ~Network() = default;

  virtual std::size_t param_count() const = 0;
  virtual int out_dim() const = 0;
  virtual void init(Rng& rng) = 0;

  // Forward pass reading parameter values from `theta` (one recorded scalar
  // per parameter, in the canonical order used by parameters()).
  virtual std::vector<ad::Scalar> forward(ad::Record& rec, const ad::Scalar& t,
                                          std::span<const ad::Scalar> theta) const = 0;

  std::span<const double> parameters() const { return params_; }

  void load_parameters(std::span<const double> v) {
    require(v.size() == param_count(), "load_parameters: length mismatch");
    params_.assign(v.begin(), v.end());
  }

  // Evaluation with the stored parameters on a scratch record.
  ValueTangent eval(double t) const {
    ad::Record rec;
    std::vector<ad::Scalar> theta;
    theta.reserve(params_.size());
    for (double v : params_) theta.push_back(ad::Scalar(v));
    const ad::Scalar ts = rec.input(t);
    const std::vector<ad::Scalar> out = forward(rec, ts, theta);
    ValueTangent vt;
    for (const ad::Scalar& s : out) {
      vt.value.push_back(s.value());
      vt.tangent.push_back(s.tangent());
    }
    return vt;
  }

protected:
  std::vector<double> params_;
};

}  // namespace kandae::net
