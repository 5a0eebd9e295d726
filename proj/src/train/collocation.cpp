#include "train/collocation.hpp"

namespace kandae::train {

CollocationSet sample_collocation(const TrainingConfig& cfg, const dae::DaeSystem& system) {
  CollocationSet set;
  set.initial.assign(cfg.n_i, InitialPoint{0.0, system.consistent_ics()});

  set.residual_ts.reserve(cfg.n_f);
  if (cfg.n_f == 1) {
    set.residual_ts.push_back(0.0);
  } else {
    const double h = cfg.t_end / static_cast<double>(cfg.n_f - 1);
    for (std::size_t i = 0; i < cfg.n_f; ++i)
      set.residual_ts.push_back(static_cast<double>(i) * h);
    set.residual_ts.back() = cfg.t_end;
  }
  return set;
}

}  // namespace kandae::train
