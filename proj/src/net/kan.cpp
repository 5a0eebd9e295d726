#include "kan.hpp"

#include <cmath>
#include <string>

namespace kandae::net {

using bspline::EdgeInput;
using bspline::SplineGrid;

KanNetwork::KanNetwork(std::vector<int> shape, const SplineGrid* input_grid,
                       const SplineGrid* hidden_grid)
    : shape_(std::move(shape)), input_grid_(input_grid), hidden_grid_(hidden_grid) {
  require(shape_.size() >= 2, "KAN shape needs at least two entries");
  for (int n : shape_) require(n >= 1, "KAN shape entries must be positive");
  require(shape_.front() == 1, "KAN input dimension must be 1 (time)");
  require(input_grid_ && hidden_grid_, "KAN needs grids");
  require(input_grid_->basis_count() == hidden_grid_->basis_count(),
          "input and hidden grids must have the same basis count");
  std::size_t off = 0;
  for (int l = 0; l + 1 < static_cast<int>(shape_.size()); ++l) {
    layer_offset_.push_back(off);
    const std::size_t per_edge = 1 + static_cast<std::size_t>(grid_for(l).basis_count());
    off += static_cast<std::size_t>(shape_[l]) * shape_[l + 1] * per_edge;
  }
  n_params_ = off;
  params_.assign(n_params_, 0.0);
}

std::size_t KanNetwork::edge_offset(int layer, int i, int j) const {
  const std::size_t per_edge = 1 + static_cast<std::size_t>(grid_for(layer).basis_count());
  return layer_offset_[static_cast<std::size_t>(layer)] +
         (static_cast<std::size_t>(i) * shape_[layer] + j) * per_edge;
}

void KanNetwork::init(Rng& rng) {
  for (int l = 0; l < layer_count(); ++l) {
    const int n_in = shape_[l];
    const int n_out = shape_[l + 1];
    const int nb = grid_for(l).basis_count();
    const double wr = std::sqrt(6.0 / (n_in + n_out));
    for (int i = 0; i < n_out; ++i) {
      for (int j = 0; j < n_in; ++j) {
        const std::size_t off = edge_offset(l, i, j);
        params_[off] = rng.uniform(-wr, wr);
        for (int s = 0; s < nb; ++s)
          params_[off + 1 + s] = rng.normal(0.0, 0.1);
      }
    }
  }
}

std::vector<ad::Scalar> KanNetwork::forward(ad::Record& rec, const ad::Scalar& t,
                                            std::span<const ad::Scalar> theta) const {
  require(theta.size() == n_params_, "KAN forward: wrong parameter count");
  std::vector<ad::Scalar> x{t};
  std::vector<ad::Scalar> edge_out;
  std::vector<ad::Scalar> next;
  for (int l = 0; l < layer_count(); ++l) {
    try {
      const SplineGrid& grid = grid_for(l);
      const int n_in = shape_[l];
      const int n_out = shape_[l + 1];
      const std::size_t per_edge = 1 + static_cast<std::size_t>(grid.basis_count());
      // edge_out laid out row-major (i, j); inputs prepared once per j
      edge_out.assign(static_cast<std::size_t>(n_in) * n_out, ad::Scalar(0.0));
      for (int j = 0; j < n_in; ++j) {
        const EdgeInput prep = bspline::prepare_edge_input(grid, x[static_cast<std::size_t>(j)]);
        for (int i = 0; i < n_out; ++i) {
          const auto wc = theta.subspan(edge_offset(l, i, j), per_edge);
          edge_out[static_cast<std::size_t>(i) * n_in + j] =
              bspline::edge_apply(rec, wc, prep);
        }
      }
      next.clear();
      for (int i = 0; i < n_out; ++i) {
        const std::span<const ad::Scalar> row(
            edge_out.data() + static_cast<std::size_t>(i) * n_in,
            static_cast<std::size_t>(n_in));
        next.push_back(n_in == 1 ? row[0] : rec.sum(row));
      }
      x = next;
    } catch (const Error& e) {
      fail("KAN layer " + std::to_string(l) + ": " + e.what());
    }
  }
  return x;
}

bspline::EdgeActivation KanNetwork::edge_at(int layer, int i, int j) const {
  require(layer >= 0 && layer < layer_count(), "edge_at: bad layer");
  require(i >= 0 && i < shape_[layer + 1] && j >= 0 && j < shape_[layer],
          "edge_at: bad edge index");
  const SplineGrid& grid = grid_for(layer);
  bspline::EdgeActivation e;
  e.grid = &grid;
  const std::size_t off = edge_offset(layer, i, j);
  e.w = params_[off];
  e.c.assign(params_.begin() + static_cast<std::ptrdiff_t>(off) + 1,
             params_.begin() + static_cast<std::ptrdiff_t>(off) + 1 + grid.basis_count());
  return e;
}

}  // namespace kandae::net
