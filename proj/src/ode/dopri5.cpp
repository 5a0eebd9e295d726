#include "ode/dopri5.hpp"

#include <algorithm>
#include <cmath>

namespace kandae::ode {

namespace {

// Dormand-Prince coefficients; the last A row doubles as the 5th-order
// weights (FSAL)
constexpr double kC[7] = {0.0, 1.0 / 5.0, 3.0 / 10.0, 4.0 / 5.0, 8.0 / 9.0, 1.0, 1.0};
constexpr double kA[7][6] = {
    {},
    {1.0 / 5.0},
    {3.0 / 40.0, 9.0 / 40.0},
    {44.0 / 45.0, -56.0 / 15.0, 32.0 / 9.0},
    {19372.0 / 6561.0, -25360.0 / 2187.0, 64448.0 / 6561.0, -212.0 / 729.0},
    {9017.0 / 3168.0, -355.0 / 33.0, 46732.0 / 5247.0, 49.0 / 176.0,
     -5103.0 / 18656.0},
    {35.0 / 384.0, 0.0, 500.0 / 1113.0, 125.0 / 192.0, -2187.0 / 6784.0,
     11.0 / 84.0},
};
// b - bhat, applied to the stage values to get the embedded error estimate
constexpr double kE[7] = {
    35.0 / 384.0 - 5179.0 / 57600.0,
    0.0,
    500.0 / 1113.0 - 7571.0 / 16695.0,
    125.0 / 192.0 - 393.0 / 640.0,
    -2187.0 / 6784.0 + 92097.0 / 339200.0,
    11.0 / 84.0 - 187.0 / 2100.0,
    -1.0 / 40.0,
};

constexpr double kFacMin = 0.2;
constexpr double kFacMax = 5.0;

void check_finite(std::span<const double> v, double t, Trajectory& partial) {
  for (double x : v)
    if (!std::isfinite(x))
      throw IntegrationError("dopri5: non-finite right-hand side at t = " + std::to_string(t),
                             std::move(partial));
}

}  // namespace

Trajectory integrate(const OdeProblem& problem, const IntegratorSettings& settings) {
  const std::size_t n = problem.dimension;
  require(n > 0, "dopri5: dimension must be positive");
  require(problem.y0.size() == n, "dopri5: initial state length mismatch");
  require(static_cast<bool>(problem.rhs), "dopri5: missing right-hand side");
  require(problem.t1 > problem.t0, "dopri5: time span must be forward");
  require(settings.rtol > 0.0 && settings.atol > 0.0, "dopri5: tolerances must be positive");
  require(settings.safety > 0.0 && settings.safety < 1.0, "dopri5: safety must lie in (0, 1)");
  for (double x : problem.y0)
    require(std::isfinite(x), "dopri5: non-finite initial state");

  const double span = problem.t1 - problem.t0;
  const double hmax = settings.max_step > 0.0 ? std::min(settings.max_step, span) : span;

  Trajectory traj;
  traj.times.push_back(problem.t0);
  traj.states.push_back(problem.y0);

  std::vector<double> y = problem.y0;
  std::vector<double> k[7];
  for (auto& ki : k) ki.resize(n);
  std::vector<double> ytmp(n), ynew(n), err_vec(n);

  double t = problem.t0;
  problem.rhs(t, y, k[0]);
  traj.rhs_evals += 1;
  check_finite(k[0], t, traj);

  double h;
  if (settings.initial_step > 0.0) {
    h = std::min(settings.initial_step, hmax);
  } else {
    // Hairer's starting-step heuristic restricted to the data already in
    // hand: h = 0.01 * |y0|_sc / |f(t0,y0)|_sc
    double d0 = 0.0, d1 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sc = settings.atol + settings.rtol * std::abs(y[i]);
      d0 += (y[i] / sc) * (y[i] / sc);
      d1 += (k[0][i] / sc) * (k[0][i] / sc);
    }
    d0 = std::sqrt(d0 / static_cast<double>(n));
    d1 = std::sqrt(d1 / static_cast<double>(n));
    h = (d0 < 1e-5 || d1 < 1e-5) ? 1e-6 : 0.01 * d0 / d1;
    h = std::min(h, hmax);
  }

  std::size_t attempts = 0;
  while (t < problem.t1) {
    if (attempts >= settings.max_steps)
      throw IntegrationError("dopri5: exceeded " + std::to_string(settings.max_steps) +
                                 " attempted steps",
                             std::move(traj));
    ++attempts;

    h = std::min(h, hmax);
    const bool last = t + h >= problem.t1 - 1e-14 * span;
    if (last) h = problem.t1 - t;
    require(h > std::abs(t) * 1e-15 + 1e-300, "dopri5: step size underflow");

    for (int s = 1; s < 7; ++s) {
      for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (int j = 0; j < s; ++j) acc += kA[s][j] * k[j][i];
        ytmp[i] = y[i] + h * acc;
      }
      problem.rhs(t + kC[s] * h, ytmp, k[s]);
      traj.rhs_evals += 1;
      check_finite(k[s], t + kC[s] * h, traj);
    }
    // stage 7 input is already the 5th-order solution
    ynew = ytmp;

    double err = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double e = 0.0;
      for (int j = 0; j < 7; ++j) e += kE[j] * k[j][i];
      e *= h;
      const double sc =
          settings.atol + settings.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      err += (e / sc) * (e / sc);
    }
    err = std::sqrt(err / static_cast<double>(n));

    double factor = err > 0.0 ? settings.safety * std::pow(err, -0.2) : kFacMax;
    factor = std::clamp(factor, kFacMin, kFacMax);

    if (err <= 1.0) {
      t = last ? problem.t1 : t + h;
      y = ynew;
      std::swap(k[0], k[6]);
      traj.times.push_back(t);
      traj.states.push_back(y);
      h *= factor;
    } else {
      traj.rejected_steps += 1;
      h *= factor;
    }
  }
  return traj;
}

}  // namespace kandae::ode
