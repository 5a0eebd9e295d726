#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kandae/kandae.h"

namespace {

int report_failure(int code) {
  std::fprintf(stderr, "error: %s\n", kandae_last_error());
  return code;
}

int cmd_solve(const std::string& config, const std::string& out_dir, bool dry_run,
              bool have_seed, std::uint64_t seed) {
  kandae_run* run = nullptr;
  const std::uint64_t* seed_ptr = have_seed ? &seed : nullptr;
  const int rc = kandae_solve(config.c_str(), dry_run ? nullptr : out_dir.c_str(),
                              dry_run ? 1 : 0, seed_ptr, &run);
  if (rc != KANDAE_OK) return report_failure(rc);

  if (dry_run) {
    std::printf("%s", kandae_run_config(run));
    kandae_run_free(run);
    return 0;
  }

  double loss = 0.0;
  kandae_run_final_loss(run, &loss);
  std::printf("run complete: %s\n", out_dir.c_str());
  std::printf("final loss: %.17g\n", loss);
  for (size_t i = 0; i < kandae_run_variable_count(run); ++i) {
    double re = 0.0;
    if (kandae_run_re(run, i, &re) == KANDAE_OK)
      std::printf("RE %-8s %.17g\n", kandae_run_variable(run, i), re);
  }
  kandae_run_free(run);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DAE benchmark driver: physics-informed KAN/MLP solvers with a "
               "DOPRI5 drift-off reference"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "train one configuration and report errors");
  std::string config_path, out_dir;
  bool dry_run = false;
  std::uint64_t seed = 0;
  solve->add_option("--config", config_path, "key=value configuration file")
      ->required();
  solve->add_option("--out", out_dir, "output directory")->required();
  solve->add_flag("--dry-run", dry_run, "validate and print resolved settings only");
  auto* seed_opt = solve->add_option("--seed", seed, "override the config seed");

  auto* drift = app.add_subcommand("driftoff",
                                   "integrate the index-1 pendulum and tabulate "
                                   "constraint drift");
  std::string drift_system = "pendulum";
  std::string drift_out;
  double horizon = 100.0;
  double rtol = 1e-8;
  drift->add_option("--system", drift_system, "dae system (pendulum)");
  drift->add_option("--horizon", horizon, "integration horizon");
  drift->add_option("--rtol", rtol, "relative = absolute tolerance");
  drift->add_option("--out", drift_out, "output directory")->required();

  auto* compare = app.add_subcommand("compare", "merge finished runs into one table");
  std::vector<std::string> run_dirs;
  std::string table_path;
  compare->add_option("--runs", run_dirs, "finished run directories")
      ->required()
      ->expected(-1);
  compare->add_option("--out", table_path, "output csv path")->required();

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed())
    return cmd_solve(config_path, out_dir, dry_run, seed_opt->count() > 0, seed);

  if (drift->parsed()) {
    const int rc = kandae_driftoff(drift_system.c_str(), horizon, rtol,
                                   drift_out.c_str());
    if (rc != KANDAE_OK) return report_failure(rc);
    std::printf("drift table written: %s/drift_table.csv\n", drift_out.c_str());
    return 0;
  }

  std::vector<const char*> dirs;
  dirs.reserve(run_dirs.size());
  for (const auto& d : run_dirs) dirs.push_back(d.c_str());
  const int rc = kandae_compare(dirs.data(), dirs.size(), table_path.c_str());
  if (rc != KANDAE_OK) return report_failure(rc);
  std::printf("comparison table written: %s\n", table_path.c_str());
  return 0;
}
