#pragma once

#include <string>

#include "report/grid_eval.hpp"
#include "train/config.hpp"

namespace kandae::report {

// Trains per the config, evaluates on the uniform test grid, and writes the
// full artifact set into out_dir:
//   resolved.conf, trace.csv, ae.csv, re.csv, summary.csv, driftoff.csv,
//   params.bin, ae_<var>.svg per variable, driftoff.svg, MANIFEST.txt
// A failed run still leaves resolved.conf plus a MANIFEST recording the error
// before the exception propagates.
RunReport run_experiment(const train::TrainingConfig& cfg, const std::string& out_dir);

// resolved-settings text used by dry runs (identical to resolved.conf content)
std::string resolved_settings(const train::TrainingConfig& cfg);

// drift table of the reference integrator on the pendulum, written to
// out_dir/drift_table.csv with columns t, c3_residual, c2_residual
void run_driftoff(double horizon, double rtol, const std::string& out_dir);

}  // namespace kandae::report
