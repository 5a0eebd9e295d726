#include "dae/system.hpp"

#include "dae/systems_impl.hpp"

namespace kandae::dae {

IndexForm form_from_int(int v) {
  require(v >= 1 && v <= 3, "index form must be 1, 2 or 3");
  return static_cast<IndexForm>(v);
}

double DaeSystem::constraint_residual(int level, const StateSample& s) const {
  std::vector<double> F;
  residual(form_from_int(level), s.t, s.u, s.du, s.z, F);
  return F.back();
}

std::vector<double> DaeSystem::consistent_ics() const {
  const StateSample s0 = exact_solution(0.0);
  std::vector<double> ics(s0.u);
  ics.insert(ics.end(), s0.z.begin(), s0.z.end());
  return ics;
}

const DaeSystem& system_by_name(const std::string& name) {
  static const PendulumSystem pendulum;
  static const ParticleSystem particle;
  static const RobotArmSystem robot;
  if (name == "pendulum") return pendulum;
  if (name == "particle") return particle;
  if (name == "robot") return robot;
  fail("unknown system '" + name + "' (expected pendulum, particle or robot)");
}

std::vector<std::string> system_names() { return {"pendulum", "particle", "robot"}; }

}  // namespace kandae::dae
