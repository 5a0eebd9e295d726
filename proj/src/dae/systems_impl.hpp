#pragma once

#include "dae/system.hpp"

namespace kandae::dae {

class PendulumSystem final : public DaeSystem {
 public:
  std::string name() const override { return "pendulum"; }
  std::vector<std::string> variable_names() const override {
    return {"x", "y", "u", "v", "lambda"};
  }
  void residual(IndexForm form, double t, std::span<const double> u,
                std::span<const double> du, std::span<const double> z,
                std::vector<double>& out) const override;
  void residual(IndexForm form, const ad::Scalar& t, std::span<const ad::Scalar> u,
                std::span<const ad::Scalar> du, std::span<const ad::Scalar> z,
                std::vector<ad::Scalar>& out) const override;
  StateSample exact_solution(double t) const override;
};

class ParticleSystem final : public DaeSystem {
 public:
  std::string name() const override { return "particle"; }
  std::vector<std::string> variable_names() const override {
    return {"u1", "u2", "z1", "z2", "lambda"};
  }
  void residual(IndexForm form, double t, std::span<const double> u,
                std::span<const double> du, std::span<const double> z,
                std::vector<double>& out) const override;
  void residual(IndexForm form, const ad::Scalar& t, std::span<const ad::Scalar> u,
                std::span<const ad::Scalar> du, std::span<const ad::Scalar> z,
                std::vector<ad::Scalar>& out) const override;
  StateSample exact_solution(double t) const override;
};

class RobotArmSystem final : public DaeSystem {
 public:
  std::string name() const override { return "robot"; }
  std::vector<std::string> variable_names() const override {
    return {"u1", "u2", "v1", "v2", "lambda"};
  }
  void residual(IndexForm form, double t, std::span<const double> u,
                std::span<const double> du, std::span<const double> z,
                std::vector<double>& out) const override;
  void residual(IndexForm form, const ad::Scalar& t, std::span<const ad::Scalar> u,
                std::span<const ad::Scalar> du, std::span<const ad::Scalar> z,
                std::vector<ad::Scalar>& out) const override;
  StateSample exact_solution(double t) const override;
};

}  // namespace kandae::dae
