#include "mlp.hpp"

#include <cmath>
#include <string>

namespace kandae::net {

MlpNetwork::MlpNetwork(std::vector<int> widths) : widths_(std::move(widths)) {
  require(widths_.size() >= 2, "MLP needs at least two widths");
  for (int w : widths_) require(w >= 1, "MLP widths must be positive");
  require(widths_.front() == 1, "MLP input dimension must be 1 (time)");
  std::size_t off = 0;
  for (std::size_t l = 0; l + 1 < widths_.size(); ++l) {
    layer_offset_.push_back(off);
    off += static_cast<std::size_t>(widths_[l]) * widths_[l + 1] + widths_[l + 1];
  }
  n_params_ = off;
  params_.assign(n_params_, 0.0);
}

void MlpNetwork::init(Rng& rng) {
  for (std::size_t l = 0; l + 1 < widths_.size(); ++l) {
    const int n_in = widths_[l];
    const int n_out = widths_[l + 1];
    const double wr = std::sqrt(6.0 / (n_in + n_out));
    std::size_t off = layer_offset_[l];
    for (int i = 0; i < n_out * n_in; ++i) params_[off + i] = rng.uniform(-wr, wr);
    // biases start at zero
  }
}

std::vector<ad::Scalar> MlpNetwork::forward(ad::Record& rec, const ad::Scalar& t,
                                            std::span<const ad::Scalar> theta) const {
  require(theta.size() == n_params_, "MLP forward: wrong parameter count");
  std::vector<ad::Scalar> x{t};
  std::vector<ad::Scalar> next;
  const int n_layers = static_cast<int>(widths_.size()) - 1;
  for (int l = 0; l < n_layers; ++l) {
    try {
      const int n_in = widths_[l];
      const int n_out = widths_[l + 1];
      const std::size_t w_off = layer_offset_[static_cast<std::size_t>(l)];
      const std::size_t b_off = w_off + static_cast<std::size_t>(n_out) * n_in;
      next.clear();
      for (int i = 0; i < n_out; ++i) {
        const auto row = theta.subspan(w_off + static_cast<std::size_t>(i) * n_in,
                                       static_cast<std::size_t>(n_in));
        ad::Scalar pre = rec.bias_dot(theta[b_off + static_cast<std::size_t>(i)], row,
                                      std::span<const ad::Scalar>(x));
        next.push_back(l + 1 == n_layers ? pre : tanh(pre));
      }
      x = next;
    } catch (const Error& e) {
      fail("MLP layer " + std::to_string(l) + ": " + e.what());
    }
  }
  return x;
}

}  // namespace kandae::net
