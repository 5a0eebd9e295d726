#include "edge.hpp"

namespace kandae::bspline {

EdgeInput prepare_edge_input(const SplineGrid& grid, const ad::Scalar& x) {
  EdgeInput in;
  in.silu_x = silu(x);
  const double xp = x.value();
  ad::Scalar xs = x;
  if (xp < grid.a())
    xs = ad::Scalar(grid.a());
  else if (xp > grid.b())
    xs = ad::Scalar(grid.b());
  in.count = grid.degree() + 1;
  in.first = basis_window(grid, xs, grid.clamp(xp), in.window);
  return in;
}

ad::Scalar edge_apply(ad::Record& rec, std::span<const ad::Scalar> wc,
                      const EdgeInput& in) {
  const auto cs = wc.subspan(static_cast<std::size_t>(1 + in.first),
                             static_cast<std::size_t>(in.count));
  const ad::Scalar spline = rec.dot(
      cs, std::span<const ad::Scalar>(in.window, static_cast<std::size_t>(in.count)));
  return wc[0] * (in.silu_x + spline);
}

ad::Scalar edge_eval(const SplineGrid& grid, std::span<const ad::Scalar> wc,
                     const ad::Scalar& x) {
  require(wc.size() == static_cast<std::size_t>(grid.basis_count()) + 1,
          "edge_eval: wrong coefficient count");
  ad::Record* rec = x.record();
  for (std::size_t i = 0; !rec && i < wc.size(); ++i) rec = wc[i].record();
  if (!rec) {
    EdgeActivation e;
    e.w = wc[0].value();
    e.c.resize(wc.size() - 1);
    for (std::size_t i = 1; i < wc.size(); ++i) e.c[i - 1] = wc[i].value();
    e.grid = &grid;
    return ad::Scalar(edge_eval(e, x.value()));
  }
  const EdgeInput in = prepare_edge_input(grid, x);
  return edge_apply(*rec, wc, in);
}

ad::Scalar edge_eval(const EdgeActivation& edge, const ad::Scalar& x) {
  require(edge.grid != nullptr, "edge_eval: edge has no grid");
  require(edge.c.size() == static_cast<std::size_t>(edge.grid->basis_count()),
          "edge_eval: coefficient length mismatch");
  std::vector<ad::Scalar> wc;
  wc.reserve(edge.c.size() + 1);
  wc.emplace_back(edge.w);
  for (double ci : edge.c) wc.emplace_back(ci);
  return edge_eval(*edge.grid, std::span<const ad::Scalar>(wc), x);
}

double edge_eval(const EdgeActivation& edge, double x) {
  require(edge.grid != nullptr, "edge_eval: edge has no grid");
  const SplineGrid& g = *edge.grid;
  require(edge.c.size() == static_cast<std::size_t>(g.basis_count()),
          "edge_eval: coefficient length mismatch");
  double window[kMaxDegree + 1];
  const double xc = g.clamp(x);
  const int s0 = basis_window(g, xc, xc, window);
  double spline = 0.0;
  for (int i = 0; i <= g.degree(); ++i)
    spline += edge.c[static_cast<std::size_t>(s0 + i)] * window[i];
  return edge.w * (silu(x) + spline);
}

}  // namespace kandae::bspline
