#include "grid.hpp"

namespace kandae::bspline {

SplineGrid SplineGrid::make(double a, double b, int intervals, int degree) {
  require(intervals >= 1, "spline grid needs at least one interval");
  require(b > a, "spline grid domain is degenerate");
  require(degree >= 1 && degree <= kMaxDegree, "unsupported spline degree");
  SplineGrid g;
  g.a_ = a;
  g.b_ = b;
  g.g_ = intervals;
  g.k_ = degree;
  g.h_ = (b - a) / intervals;
  g.knots_.resize(static_cast<std::size_t>(intervals + 2 * degree + 1));
  for (int i = 0; i <= intervals + 2 * degree; ++i)
    g.knots_[static_cast<std::size_t>(i)] = a + (i - degree) * g.h_;
  return g;
}

std::vector<double> basis_values(const SplineGrid& grid, double t) {
  const double x = grid.clamp(t);
  double window[kMaxDegree + 1];
  const int s0 = basis_window(grid, x, x, window);
  std::vector<double> out(static_cast<std::size_t>(grid.basis_count()), 0.0);
  for (int i = 0; i <= grid.degree(); ++i)
    out[static_cast<std::size_t>(s0 + i)] = window[i];
  return out;
}

}  // namespace kandae::bspline
