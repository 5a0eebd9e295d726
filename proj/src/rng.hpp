#pragma once

#include <cstdint>
#include <random>

namespace kandae {

// Deterministic random source. mt19937_64 output is fixed by the standard;
// the uniform/normal transforms are done by hand because the std::*_distribution
// wrappers are implementation-defined and would break cross-library
// reproducibility of seeded runs.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // uniform in [0, 1)
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; the spare value is cached
  double normal(double mean, double stddev);

  std::uint64_t raw() { return gen_(); }

private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace kandae
