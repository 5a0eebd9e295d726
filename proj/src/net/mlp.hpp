#pragma once

#include "network.hpp"

namespace kandae::net {

// Fully connected network with tanh hidden activations and identity output.
// Parameter order: per layer the weight matrix row-major (output, input),
// then the biases.
class MlpNetwork : public Network {
public:
  explicit MlpNetwork(std::vector<int> widths);

  std::size_t param_count() const override { return n_params_; }
  int out_dim() const override { return widths_.back(); }
  const std::vector<int>& widths() const { return widths_; }

  void init(Rng& rng) override;

  std::vector<ad::Scalar> forward(ad::Record& rec, const ad::Scalar& t,
                                  std::span<const ad::Scalar> theta) const override;

private:
  std::vector<int> widths_;
  std::vector<std::size_t> layer_offset_;
  std::size_t n_params_ = 0;
};

}  // namespace kandae::net
