#include "kandae/kandae.h"

#include <exception>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include "common.hpp"
#include "report/compare.hpp"
#include "report/experiment.hpp"
#include "train/config.hpp"

namespace {

thread_local std::string g_last_error;

int set_error(int code, const std::string& message) {
  g_last_error = message;
  return code;
}

}  // namespace

struct kandae_run {
  std::string config_text;
  std::vector<std::string> variables;
  std::vector<double> re;
  double final_loss = 0.0;
  bool trained = false;
};

extern "C" {

const char* kandae_version(void) { return "0.1.0"; }

const char* kandae_last_error(void) { return g_last_error.c_str(); }

int kandae_solve(const char* config_path, const char* out_dir, int dry_run,
                 const uint64_t* seed_override, kandae_run** out_run) {
  if (out_run != nullptr) *out_run = nullptr;
  if (config_path == nullptr)
    return set_error(KANDAE_EINVAL, "config_path is null");
  if (dry_run == 0 && out_dir == nullptr)
    return set_error(KANDAE_EINVAL, "out_dir is null");

  {
    std::ifstream probe(config_path);
    if (!probe.good())
      return set_error(KANDAE_EIO, std::string("cannot open '") + config_path + "'");
  }

  kandae::train::TrainingConfig cfg;
  try {
    cfg = kandae::train::load_config(config_path);
    if (seed_override != nullptr) cfg.seed = *seed_override;
    cfg.validate();
  } catch (const std::exception& e) {
    return set_error(KANDAE_EINVAL, e.what());
  }

  auto run = std::make_unique<kandae_run>();
  run->config_text = kandae::report::resolved_settings(cfg);
  if (dry_run == 0) {
    try {
      const kandae::report::RunReport rep =
          kandae::report::run_experiment(cfg, out_dir);
      run->variables = rep.variable_names;
      run->re = rep.re;
      run->final_loss = rep.trace.final_loss;
      run->trained = true;
    } catch (const std::exception& e) {
      return set_error(KANDAE_EFAIL, e.what());
    }
  }
  if (out_run != nullptr) *out_run = run.release();
  return KANDAE_OK;
}

void kandae_run_free(kandae_run* run) { delete run; }

const char* kandae_run_config(const kandae_run* run) {
  return run == nullptr ? "" : run->config_text.c_str();
}

size_t kandae_run_variable_count(const kandae_run* run) {
  return run == nullptr ? 0 : run->variables.size();
}

const char* kandae_run_variable(const kandae_run* run, size_t index) {
  if (run == nullptr || index >= run->variables.size()) return "";
  return run->variables[index].c_str();
}

int kandae_run_re(const kandae_run* run, size_t index, double* out) {
  if (run == nullptr || out == nullptr)
    return set_error(KANDAE_EINVAL, "null run or output pointer");
  if (!run->trained || index >= run->re.size())
    return set_error(KANDAE_EINVAL, "no result at that index");
  *out = run->re[index];
  return KANDAE_OK;
}

int kandae_run_final_loss(const kandae_run* run, double* out) {
  if (run == nullptr || out == nullptr)
    return set_error(KANDAE_EINVAL, "null run or output pointer");
  if (!run->trained) return set_error(KANDAE_EINVAL, "dry run has no loss");
  *out = run->final_loss;
  return KANDAE_OK;
}

int kandae_driftoff(const char* system, double horizon, double rtol,
                    const char* out_dir) {
  if (system == nullptr || out_dir == nullptr)
    return set_error(KANDAE_EINVAL, "system or out_dir is null");
  if (std::string(system) != "pendulum")
    return set_error(KANDAE_EINVAL,
                     std::string("unsupported system '") + system + "'");
  if (!(horizon > 0.0)) return set_error(KANDAE_EINVAL, "horizon must be positive");
  if (!(rtol > 0.0)) return set_error(KANDAE_EINVAL, "rtol must be positive");
  try {
    kandae::report::run_driftoff(horizon, rtol, out_dir);
  } catch (const std::exception& e) {
    return set_error(KANDAE_EFAIL, e.what());
  }
  return KANDAE_OK;
}

int kandae_compare(const char* const* run_dirs, size_t count,
                   const char* out_path) {
  if (run_dirs == nullptr || out_path == nullptr)
    return set_error(KANDAE_EINVAL, "run_dirs or out_path is null");
  if (count == 0) return set_error(KANDAE_EINVAL, "need at least one run directory");
  std::vector<std::string> dirs;
  dirs.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (run_dirs[i] == nullptr)
      return set_error(KANDAE_EINVAL, "run directory entry is null");
    dirs.emplace_back(run_dirs[i]);
  }
  try {
    kandae::report::write_comparison(dirs, out_path);
  } catch (const std::exception& e) {
    return set_error(KANDAE_EFAIL, e.what());
  }
  return KANDAE_OK;
}

}  // extern "C"
