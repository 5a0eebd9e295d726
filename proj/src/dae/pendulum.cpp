#include <cmath>

#include "dae/elliptic.hpp"
#include "dae/systems_impl.hpp"

namespace kandae::dae {

namespace {

// Pendulum on a unit rod under unit gravity, state (x, y, u, v; lambda):
//   x' = u,  y' = v,  u' = -lambda x,  v' = -lambda y - 1
// constraint levels:
//   3: x^2 + y^2 - 1      (position)
//   2: x u + y v          (velocity)
//   1: u^2 + v^2 - lambda - y   (acceleration)
template <class T>
void pendulum_residual(IndexForm form, std::span<const T> u, std::span<const T> du,
                       std::span<const T> z, std::vector<T>& out) {
  using kandae::ad::sq;
  out.clear();
  out.reserve(5);
  out.push_back(du[0] - u[2]);
  out.push_back(du[1] - u[3]);
  out.push_back(du[2] + z[0] * u[0]);
  out.push_back(du[3] + z[0] * u[1] + 1.0);
  switch (form) {
    case IndexForm::index3:
      out.push_back(sq(u[0]) + sq(u[1]) - 1.0);
      break;
    case IndexForm::index2:
      out.push_back(u[0] * u[2] + u[1] * u[3]);
      break;
    case IndexForm::index1:
      out.push_back(sq(u[2]) + sq(u[3]) - z[0] - u[1]);
      break;
  }
}

}  // namespace

void PendulumSystem::residual(IndexForm form, double, std::span<const double> u,
                              std::span<const double> du, std::span<const double> z,
                              std::vector<double>& out) const {
  pendulum_residual(form, u, du, z, out);
}

void PendulumSystem::residual(IndexForm form, const ad::Scalar&,
                              std::span<const ad::Scalar> u,
                              std::span<const ad::Scalar> du,
                              std::span<const ad::Scalar> z,
                              std::vector<ad::Scalar>& out) const {
  pendulum_residual(form, u, du, z, out);
}

// Released from rest at the horizontal position the pendulum swings with
// energy level sin(theta/2) = k cd(t|m), k^2 = m = 1/2, which gives closed
// forms in the Jacobi functions at parameter 1/2.
StateSample PendulumSystem::exact_solution(double t) const {
  const auto [s, c, d] = sncndn(t, 0.5);
  const double d2 = d * d;
  const double d3 = d2 * d;
  const double x = c / d2;
  const double y = -0.5 * s * s / d2;
  const double u = -0.5 * s * s * s / d3;
  const double v = -s * c / d3;
  const double lam = -3.0 * y;
  StateSample out;
  out.t = t;
  out.u = {x, y, u, v};
  out.du = {u, v, -lam * x, -lam * y - 1.0};
  out.z = {lam};
  return out;
}

void pendulum_index1_rhs(double, std::span<const double> y, std::span<double> dy) {
  require(y.size() == 4 && dy.size() == 4, "pendulum_index1_rhs: state must have 4 entries");
  const double lam = y[2] * y[2] + y[3] * y[3] - y[1];
  dy[0] = y[2];
  dy[1] = y[3];
  dy[2] = -lam * y[0];
  dy[3] = -lam * y[1] - 1.0;
}

}  // namespace kandae::dae
