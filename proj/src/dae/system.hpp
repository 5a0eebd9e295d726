#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "ad/record.hpp"
#include "common.hpp"

namespace kandae::dae {

// Index form of the benchmark systems. Each system ships with its original
// index-3 constraint plus the once- and twice-differentiated replacements.
enum class IndexForm { index1 = 1, index2 = 2, index3 = 3 };

IndexForm form_from_int(int v);
inline int form_to_int(IndexForm f) { return static_cast<int>(f); }

// Plain-valued state sample: time, differential variables, their time
// derivatives, and algebraic variables.
struct StateSample {
  double t = 0.0;
  std::vector<double> u;
  std::vector<double> du;
  std::vector<double> z;
};

class DaeSystem {
 public:
  virtual ~DaeSystem() = default;

  virtual std::string name() const = 0;
  std::size_t n_diff() const { return 4; }
  std::size_t n_alg() const { return 1; }

  // differential variable names followed by algebraic ones
  virtual std::vector<std::string> variable_names() const = 0;

  // Residual vector F(u', u, z, t) of the requested index form; the first
  // n_diff entries are the differential equations, the last n_alg entries the
  // constraint of that form. `out` is resized to n_diff + n_alg.
  virtual void residual(IndexForm form, double t, std::span<const double> u,
                        std::span<const double> du, std::span<const double> z,
                        std::vector<double>& out) const = 0;
  virtual void residual(IndexForm form, const ad::Scalar& t,
                        std::span<const ad::Scalar> u, std::span<const ad::Scalar> du,
                        std::span<const ad::Scalar> z,
                        std::vector<ad::Scalar>& out) const = 0;

  // Constraint of the given level (3 = position, 2 = velocity,
  // 1 = acceleration) evaluated on a sample.
  double constraint_residual(int level, const StateSample& s) const;

  virtual StateSample exact_solution(double t) const = 0;

  // u(0) then z(0)
  std::vector<double> consistent_ics() const;
};

// registered systems: "pendulum", "particle", "robot"
const DaeSystem& system_by_name(const std::string& name);
std::vector<std::string> system_names();

// Right-hand side of the pendulum index-1 problem reduced to an ODE in
// (x, y, u, v), with the multiplier eliminated through the acceleration-level
// constraint. This is the reference problem for drift-off measurements.
void pendulum_index1_rhs(double t, std::span<const double> y, std::span<double> dy);

}  // namespace kandae::dae
