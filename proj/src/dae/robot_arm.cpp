#include <cmath>

#include "dae/systems_impl.hpp"

namespace kandae::dae {

namespace {

// Planar two-link arm with the end effector constrained to the x-axis,
// unit link lengths, link masses 3. State (u1, u2, v1, v2; lambda) with
// u the joint angles and v their velocities:
//   u' = v
//   M(u) v' = f(u, v) - G(u)^T lambda
//   M = [5 + 3 cos u2, 1 + 1.5 cos u2; 1 + 1.5 cos u2, 1]
//   f = [(cos u1 + cos(u1+u2)) v1 - 3 u1;
//        cos(u1+u2) v1 + (1 - 1.5 cos u2) u1]
// constraint levels (G is the u-gradient of level 3):
//   3: sin u1 + sin(u1+u2)
//   2: cos(u1) v1 + cos(u1+u2) (v1 + v2)
//   1: -sin(u1) v1^2 + cos(u1) v1' + (v1' + v2') cos(u1+u2)
//      - sin(u1+u2) (v1 + v2)^2
template <class T>
void robot_residual(IndexForm form, std::span<const T> u, std::span<const T> du,
                    std::span<const T> z, std::vector<T>& out) {
  using std::cos;
  using std::sin;
  using kandae::ad::sq;

  const T c2 = cos(u[1]);
  const T c1 = cos(u[0]);
  const T s1 = sin(u[0]);
  const T c12 = cos(u[0] + u[1]);
  const T s12 = sin(u[0] + u[1]);

  const T m11 = 5.0 + 3.0 * c2;
  const T m12 = 1.0 + 1.5 * c2;
  const T f1 = (c1 + c12) * u[2] - 3.0 * u[0];
  const T f2 = c12 * u[2] + (1.0 - 1.5 * c2) * u[0];
  const T g1 = c1 + c12;
  const T g2 = c12;

  out.clear();
  out.reserve(5);
  out.push_back(du[0] - u[2]);
  out.push_back(du[1] - u[3]);
  out.push_back(m11 * du[2] + m12 * du[3] - f1 + g1 * z[0]);
  out.push_back(m12 * du[2] + du[3] - f2 + g2 * z[0]);
  switch (form) {
    case IndexForm::index3:
      out.push_back(s1 + s12);
      break;
    case IndexForm::index2:
      out.push_back(c1 * u[2] + c12 * (u[2] + u[3]));
      break;
    case IndexForm::index1:
      out.push_back(-s1 * sq(u[2]) + c1 * du[2] + (du[2] + du[3]) * c12 -
                    s12 * sq(u[2] + u[3]));
      break;
  }
}

}  // namespace

void RobotArmSystem::residual(IndexForm form, double, std::span<const double> u,
                              std::span<const double> du, std::span<const double> z,
                              std::vector<double>& out) const {
  robot_residual(form, u, du, z, out);
}

void RobotArmSystem::residual(IndexForm form, const ad::Scalar&,
                              std::span<const ad::Scalar> u,
                              std::span<const ad::Scalar> du,
                              std::span<const ad::Scalar> z,
                              std::vector<ad::Scalar>& out) const {
  robot_residual(form, u, du, z, out);
}

StateSample RobotArmSystem::exact_solution(double t) const {
  const double st = std::sin(t);
  const double ct = std::cos(t);
  StateSample out;
  out.t = t;
  out.u = {st, -2.0 * st, ct, -2.0 * ct};
  out.du = {ct, -2.0 * ct, -st, 2.0 * st};
  out.z = {ct};
  return out;
}

}  // namespace kandae::dae
