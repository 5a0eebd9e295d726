#pragma once

#include "../bspline/edge.hpp"
#include "network.hpp"

namespace kandae::net {

// Composition of edge-activation layers. Layer l maps shape[l] inputs to
// shape[l+1] outputs; output node i is the sum over inputs j of
// phi_{l,i,j}(x_j). Layer 0 reads the raw time input and uses the input grid;
// deeper layers use the hidden grid. Parameter order: layers in sequence,
// edges row-major by (output, input), per edge the weight then the spline
// coefficients.
class KanNetwork : public Network {
public:
  KanNetwork(std::vector<int> shape, const bspline::SplineGrid* input_grid,
             const bspline::SplineGrid* hidden_grid);

  std::size_t param_count() const override { return n_params_; }
  int out_dim() const override { return shape_.back(); }
  const std::vector<int>& shape() const { return shape_; }

  void init(Rng& rng) override;

  std::vector<ad::Scalar> forward(ad::Record& rec, const ad::Scalar& t,
                                  std::span<const ad::Scalar> theta) const override;

  // Copy of edge (i, j) of layer l with its current values.
  bspline::EdgeActivation edge_at(int layer, int i, int j) const;

  int layer_count() const { return static_cast<int>(shape_.size()) - 1; }
  const bspline::SplineGrid& grid_for(int layer) const {
    return layer == 0 ? *input_grid_ : *hidden_grid_;
  }

private:
  std::size_t edge_offset(int layer, int i, int j) const;

  std::vector<int> shape_;
  const bspline::SplineGrid* input_grid_;
  const bspline::SplineGrid* hidden_grid_;
  std::vector<std::size_t> layer_offset_;
  std::size_t n_params_ = 0;
};

}  // namespace kandae::net
