#pragma once

#include <span>
#include <vector>

#include "grid.hpp"

namespace kandae::bspline {

// phi(x) = w * (silu(x) + sum_s c_s B_s(x)), the trainable function on one
// network edge.
struct EdgeActivation {
  double w = 0.0;
  std::vector<double> c;  // length grid.basis_count()
  const SplineGrid* grid = nullptr;
};

// Per layer-input precomputation shared by every edge fed from the same node:
// the silu term (unclamped x) and the nonzero basis window (clamped x).
struct EdgeInput {
  ad::Scalar silu_x;
  ad::Scalar window[kMaxDegree + 1];
  int first = 0;
  int count = 0;
};

EdgeInput prepare_edge_input(const SplineGrid& grid, const ad::Scalar& x);

// Combines one edge's values with a prepared input. wc[0] = w,
// wc[1 + s] = c_s for s over the full basis range.
ad::Scalar edge_apply(ad::Record& rec, std::span<const ad::Scalar> wc,
                      const EdgeInput& in);

// phi with w and c supplied as recorded scalars (differentiable in x, w and
// every c_s).
ad::Scalar edge_eval(const SplineGrid& grid, std::span<const ad::Scalar> wc,
                     const ad::Scalar& x);

// phi with the edge's stored values entering the tape as constants.
ad::Scalar edge_eval(const EdgeActivation& edge, const ad::Scalar& x);

double edge_eval(const EdgeActivation& edge, double x);

}  // namespace kandae::bspline
