#include <cmath>

#include "dae/systems_impl.hpp"

namespace kandae::dae {

namespace {

// Particle constrained to the unit circle, state (u1, u2, z1, z2; lambda):
//   u1' = z1,  u2' = z2
//   z1' = 2 u2 - 2 u2^3 - u1 lambda
//   z2' = 2 u1 - 2 u1^3 - u2 lambda
// constraint levels:
//   3: u1^2 + u2^2 - 1
//   2: u1 z1 + u2 z2
//   1: z1^2 + z2^2 + 2 u1 u2 (2 - u2^2 - u1^2) - lambda (u2^2 + u1^2)
template <class T>
void particle_residual(IndexForm form, std::span<const T> u, std::span<const T> du,
                       std::span<const T> z, std::vector<T>& out) {
  using kandae::ad::sq;
  out.clear();
  out.reserve(5);
  out.push_back(du[0] - u[2]);
  out.push_back(du[1] - u[3]);
  out.push_back(du[2] - (2.0 * u[1] - 2.0 * u[1] * sq(u[1]) - u[0] * z[0]));
  out.push_back(du[3] - (2.0 * u[0] - 2.0 * u[0] * sq(u[0]) - u[1] * z[0]));
  switch (form) {
    case IndexForm::index3:
      out.push_back(sq(u[0]) + sq(u[1]) - 1.0);
      break;
    case IndexForm::index2:
      out.push_back(u[0] * u[2] + u[1] * u[3]);
      break;
    case IndexForm::index1:
      out.push_back(sq(u[2]) + sq(u[3]) +
                    2.0 * u[0] * u[1] * (2.0 - sq(u[1]) - sq(u[0])) -
                    z[0] * (sq(u[1]) + sq(u[0])));
      break;
  }
}

}  // namespace

void ParticleSystem::residual(IndexForm form, double, std::span<const double> u,
                              std::span<const double> du, std::span<const double> z,
                              std::vector<double>& out) const {
  particle_residual(form, u, du, z, out);
}

void ParticleSystem::residual(IndexForm form, const ad::Scalar&,
                              std::span<const ad::Scalar> u,
                              std::span<const ad::Scalar> du,
                              std::span<const ad::Scalar> z,
                              std::vector<ad::Scalar>& out) const {
  particle_residual(form, u, du, z, out);
}

StateSample ParticleSystem::exact_solution(double t) const {
  const double st = std::sin(t);
  const double ct = std::cos(t);
  StateSample out;
  out.t = t;
  out.u = {ct, st, -st, ct};
  out.du = {-st, ct, -ct, -st};
  out.z = {1.0 + std::sin(2.0 * t)};
  return out;
}

}  // namespace kandae::dae
