#include <doctest.h>

#include <array>
#include <cmath>
#include <vector>

#include "bspline/edge.hpp"
#include "bspline/grid.hpp"
#include "rng.hpp"

using kandae::Rng;
using kandae::ad::Record;
using kandae::ad::Scalar;
using kandae::bspline::EdgeActivation;
using kandae::bspline::SplineGrid;
using kandae::bspline::basis_values;
using kandae::bspline::basis_window;
using kandae::bspline::edge_eval;
using kandae::bspline::silu;

namespace {

// dense-sample least-squares fit of spline coefficients to f, solved by
// Gaussian elimination on the normal equations
std::vector<double> fit_coefficients(const SplineGrid& g, double (*f)(double)) {
  const int nb = g.basis_count();
  const int ns = 200;
  std::vector<double> ata(static_cast<std::size_t>(nb * nb), 0.0);
  std::vector<double> aty(static_cast<std::size_t>(nb), 0.0);
  for (int s = 0; s < ns; ++s) {
    const double x = g.a() + (g.b() - g.a()) * s / (ns - 1.0);
    const std::vector<double> row = basis_values(g, x);
    const double y = f(x);
    for (int i = 0; i < nb; ++i) {
      aty[i] += row[i] * y;
      for (int j = 0; j < nb; ++j) ata[i * nb + j] += row[i] * row[j];
    }
  }
  for (int col = 0; col < nb; ++col) {
    int piv = col;
    for (int r = col + 1; r < nb; ++r)
      if (std::abs(ata[r * nb + col]) > std::abs(ata[piv * nb + col])) piv = r;
    for (int j = 0; j < nb; ++j) std::swap(ata[col * nb + j], ata[piv * nb + j]);
    std::swap(aty[col], aty[piv]);
    for (int r = 0; r < nb; ++r) {
      if (r == col) continue;
      const double m = ata[r * nb + col] / ata[col * nb + col];
      for (int j = 0; j < nb; ++j) ata[r * nb + j] -= m * ata[col * nb + j];
      aty[r] -= m * aty[col];
    }
  }
  std::vector<double> c(static_cast<std::size_t>(nb));
  for (int i = 0; i < nb; ++i) c[i] = aty[i] / ata[i * nb + i];
  return c;
}

}  // namespace

TEST_SUITE("bsplines") {

TEST_CASE("grid construction and validation") {
  const SplineGrid g = SplineGrid::make(-1.0, 1.0, 5, 3);
  CHECK(g.basis_count() == 8);
  REQUIRE(g.knots().size() == 12);
  CHECK(g.knots().front() == doctest::Approx(-2.2).epsilon(1e-15));
  CHECK(g.knots().back() == doctest::Approx(2.2).epsilon(1e-15));
  for (std::size_t i = 1; i < g.knots().size(); ++i)
    CHECK(g.knots()[i] - g.knots()[i - 1] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK_THROWS_AS((void)SplineGrid::make(-1.0, 1.0, 0, 3), kandae::Error);
  CHECK_THROWS_AS((void)SplineGrid::make(1.0, 1.0, 5, 3), kandae::Error);
  CHECK_THROWS_AS((void)SplineGrid::make(1.0, -1.0, 5, 3), kandae::Error);
}

TEST_CASE("basis values match an independent implementation") {
  const SplineGrid g = SplineGrid::make(-1.0, 1.0, 5, 3);
  struct RowCheck {
    double x;
    std::array<double, 8> want;
  };
  const RowCheck rows[] = {
      {-1.0, {0.16666666666666666, 0.66666666666666652, 0.1666666666666666, 0, 0, 0, 0, 0}},
      {-0.63, {7.0312500000000184e-05, 0.20676822916666676, 0.66125260416666676,
               0.13190885416666664, 0, 0, 0, 0}},
      {-0.2, {0, 0, 0.1666666666666668, 0.66666666666666663, 0.16666666666666655, 0, 0, 0}},
      {0.0, {0, 0, 0.020833333333333374, 0.47916666666666674, 0.47916666666666641,
             0.020833333333333311, 0, 0}},
      {0.41, {0, 0, 0, 0.017861979166666698, 0.46339322916666692, 0.49462760416666657,
              0.024117187499999939, 0}},
      {0.99, {0, 0, 0, 0, 2.6041666666666751e-06, 0.17947135416666687,
              0.66604947916666646, 0.15447656249999983}},
      {1.0, {0, 0, 0, 0, 0, 0.16666666666666688, 0.66666666666666652, 0.16666666666666649}},
  };
  for (const auto& rc : rows) {
    const std::vector<double> got = basis_values(g, rc.x);
    REQUIRE(got.size() == 8);
    for (int i = 0; i < 8; ++i)
      CHECK(got[i] == doctest::Approx(rc.want[i]).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("cardinal cubic takes 2/3 at the center of its support") {
  const SplineGrid g = SplineGrid::make(-1.0, 1.0, 5, 3);
  // basis 3 spans knots [-1, 0.6]; its center is knot index 5 = -0.2
  const std::vector<double> v = basis_values(g, -0.2);
  CHECK(v[3] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("partition of unity on 1000 points") {
  const SplineGrid g = SplineGrid::make(-1.0, 1.0, 5, 3);
  for (int i = 0; i < 1000; ++i) {
    const double t = -1.0 + 2.0 * i / 999.0;
    const std::vector<double> v = basis_values(g, t);
    double s = 0.0;
    int nonzero = 0;
    for (double x : v) {
      CHECK(x >= 0.0);
      s += x;
      if (x != 0.0) ++nonzero;
    }
    CHECK(std::abs(s - 1.0) <= 1e-12);
    CHECK(nonzero <= g.degree() + 1);
  }
}

TEST_CASE("local support") {
  const SplineGrid g = SplineGrid::make(0.0, 1.0, 5, 3);
  const auto& kn = g.knots();
  for (int s = 0; s < g.basis_count(); ++s) {
    for (int i = 0; i < 200; ++i) {
      const double t = i / 199.0;
      if (t > kn[s] && t < kn[s + g.degree() + 1]) continue;
      const std::vector<double> v = basis_values(g, t);
      if (t < kn[s] || t > kn[s + g.degree() + 1])
        CHECK(v[s] == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    }
  }
}

TEST_CASE("basis tangents match finite differences away from knots") {
  const SplineGrid g = SplineGrid::make(-1.0, 1.0, 5, 3);
  Rng rng(2468);
  for (int rep = 0; rep < 50; ++rep) {
    double t = rng.uniform(-0.99, 0.99);
    // keep a safe distance from the knots
    const double frac = (t - g.a()) / g.spacing();
    if (std::abs(frac - std::round(frac)) < 0.05)
      t += 0.1 * g.spacing();
    Record rec;
    Scalar x = rec.input(t);
    Scalar window[kandae::bspline::kMaxDegree + 1];
    const int s0 = basis_window(g, x, t, window);
    const double h = 1e-6;
    const std::vector<double> vp = basis_values(g, t + h);
    const std::vector<double> vm = basis_values(g, t - h);
    for (int i = 0; i <= g.degree(); ++i) {
      const double fd = (vp[s0 + i] - vm[s0 + i]) / (2.0 * h);
      CHECK(window[i].tangent() == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("frozen derivative value") {
  const SplineGrid g = SplineGrid::make(-1.0, 1.0, 5, 3);
  Record rec;
  Scalar x = rec.input(0.41);
  Scalar window[kandae::bspline::kMaxDegree + 1];
  const int s0 = basis_window(g, x, 0.41, window);
  REQUIRE(s0 == 3);
  CHECK(window[0].value() == doctest::Approx(0.017861979166666698).epsilon(1e-13));
  CHECK(window[0].tangent() == doctest::Approx(-0.28203125).epsilon(1e-12));
  CHECK(window[1].value() == doctest::Approx(0.46339322916666692).epsilon(1e-13));
  CHECK(window[1].tangent() == doctest::Approx(-1.59140625).epsilon(1e-12));
}

TEST_CASE("silu values and identity") {
  CHECK(silu(0.0) == 0.0);
  CHECK(silu(1.0) == doctest::Approx(0.73105857863000488).epsilon(1e-15));
  Record rec;
  Scalar x = rec.input(1.0);
  Scalar s = silu(x);
  CHECK(s.value() == doctest::Approx(0.73105857863000488).epsilon(1e-15));
  Rng rng(97531);
  for (int i = 0; i < 100; ++i) {
    const double v = rng.uniform(-4.0, 4.0);
    CHECK(silu(v) - silu(-v) == doctest::Approx(v).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("edge evaluation basics") {
  const SplineGrid g = SplineGrid::make(-1.0, 1.0, 5, 3);
  EdgeActivation e;
  e.grid = &g;
  e.c.assign(static_cast<std::size_t>(g.basis_count()), 0.0);
  e.w = 0.0;
  CHECK(edge_eval(e, 0.37) == 0.0);
  e.w = 1.0;
  for (double x : {-0.9, -0.1, 0.0, 0.55, 1.0})
    CHECK(edge_eval(e, x) == doctest::Approx(silu(x)).epsilon(1e-15));

  Record rec;
  Scalar xs = rec.input(0.55);
  Scalar out = edge_eval(e, xs);
  CHECK(out.value() == doctest::Approx(edge_eval(e, 0.55)).epsilon(1e-15));
}

TEST_CASE("edge eval is linear in the coefficients") {
  const SplineGrid g = SplineGrid::make(-1.0, 1.0, 5, 3);
  Rng rng(8642);
  EdgeActivation e1, e2, esum;
  for (EdgeActivation* e : {&e1, &e2, &esum}) {
    e->grid = &g;
    e->w = 0.8;
    e->c.resize(static_cast<std::size_t>(g.basis_count()));
  }
  for (int i = 0; i < g.basis_count(); ++i) {
    e1.c[i] = rng.uniform(-1.0, 1.0);
    e2.c[i] = rng.uniform(-1.0, 1.0);
    esum.c[i] = e1.c[i] + e2.c[i];
  }
  for (int i = 0; i < 50; ++i) {
    const double x = rng.uniform(-1.0, 1.0);
    const double lhs = edge_eval(esum, x);
    const double rhs = edge_eval(e1, x) + edge_eval(e2, x) - 0.8 * silu(x);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12).scale(1.0));
  }
}

TEST_CASE("edge with coefficients fit to sin approximates silu + sin") {
  const SplineGrid g = SplineGrid::make(-1.0, 1.0, 5, 3);
  EdgeActivation e;
  e.grid = &g;
  e.w = 1.0;
  e.c = fit_coefficients(g, [](double x) { return std::sin(x); });
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const double x = -1.0 + 2.0 * i / 499.0;
    worst = std::max(worst, std::abs(edge_eval(e, x) - (silu(x) + std::sin(x))));
  }
  CHECK(worst <= 1e-4);
}

TEST_CASE("edge eval differentiable in parameters") {
  const SplineGrid g = SplineGrid::make(-1.0, 1.0, 5, 3);
  Rng rng(11223);
  std::vector<double> wc(static_cast<std::size_t>(g.basis_count()) + 1);
  for (double& v : wc) v = rng.uniform(-0.8, 0.8);
  const double x0 = 0.3;

  Record rec;
  std::vector<Scalar> wcs;
  for (double v : wc) wcs.push_back(rec.parameter(v));
  Scalar x = rec.input(x0);
  Scalar out = edge_eval(g, std::span<const Scalar>(wcs), x);
  auto grad = rec.gradient(out);
  REQUIRE(grad.size() == wc.size());

  EdgeActivation e;
  e.grid = &g;
  const double h = 1e-6;
  for (std::size_t i = 0; i < wc.size(); ++i) {
    auto wp = wc, wm = wc;
    wp[i] += h;
    wm[i] -= h;
    e.w = wp[0];
    e.c.assign(wp.begin() + 1, wp.end());
    const double fp = edge_eval(e, x0);
    e.w = wm[0];
    e.c.assign(wm.begin() + 1, wm.end());
    const double fm = edge_eval(e, x0);
    const double fd = (fp - fm) / (2.0 * h);
    CHECK(grad[i] == doctest::Approx(fd).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("inputs outside the grid clamp the spline term only") {
  const SplineGrid g = SplineGrid::make(-1.0, 1.0, 5, 3);
  Rng rng(5150);
  EdgeActivation e;
  e.grid = &g;
  e.w = 1.0;
  e.c.resize(static_cast<std::size_t>(g.basis_count()));
  for (double& v : e.c) v = rng.uniform(-1.0, 1.0);
  double spline_at_b = edge_eval(e, 1.0) - silu(1.0);
  for (double x : {1.3, 2.0, 7.5}) {
    CHECK(edge_eval(e, x) ==
          doctest::Approx(silu(x) + spline_at_b).epsilon(1e-12));
  }
  // and the recorded version keeps a live tangent from the silu term
  Record rec;
  Scalar xs = rec.input(2.0);
  Scalar out = edge_eval(e, xs);
  const double h = 1e-6;
  const double fd = (edge_eval(e, 2.0 + h) - edge_eval(e, 2.0 - h)) / (2.0 * h);
  CHECK(out.tangent() == doctest::Approx(fd).epsilon(1e-8));
}

}
