#include "report/experiment.hpp"

#include <filesystem>
#include <sstream>

#include "common.hpp"
#include "net/checkpoint.hpp"
#include "ode/driftoff.hpp"
#include "report/csv.hpp"
#include "report/svg.hpp"
#include "train/trainer.hpp"

namespace kandae::report {

namespace {

std::string join_path(const std::string& dir, const std::string& name) {
  return (std::filesystem::path(dir) / name).string();
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  require(!ec, "cannot create output directory '" + dir + "': " + ec.message());
}

std::string manifest_text(const train::TrainingConfig& cfg, const std::string& status,
                          const train::TrainingTrace* trace, const std::string& error,
                          const std::vector<std::string>& files) {
  std::ostringstream out;
  out << "status = " << status << "\n";
  out << "system = " << cfg.system << "\n";
  out << "form = " << cfg.form << "\n";
  out << "net = " << cfg.net << "\n";
  out << "seed = " << cfg.seed << "\n";
  if (trace != nullptr) {
    out << "termination = " << trace->status << "\n";
    out << "iterations = " << trace->iterations << "\n";
    out << "line_search_failures = " << trace->line_search_failures << "\n";
    out << "final_loss = " << format_double(trace->final_loss) << "\n";
    out << "wall_seconds = " << format_double(trace->wall_seconds) << "\n";
  }
  if (!error.empty()) out << "error = " << error << "\n";
  for (const auto& f : files) out << "file = " << f << "\n";
  return out.str();
}

}  // namespace

std::string resolved_settings(const train::TrainingConfig& cfg) {
  return train::write_config(cfg);
}

RunReport run_experiment(const train::TrainingConfig& cfg, const std::string& out_dir) {
  cfg.validate();
  ensure_dir(out_dir);
  write_file_atomic(join_path(out_dir, "resolved.conf"), resolved_settings(cfg));

  train::TrainResult result;
  try {
    result = train::train(cfg);
  } catch (const Error& e) {
    write_file_atomic(join_path(out_dir, "MANIFEST.txt"),
                      manifest_text(cfg, "failed", nullptr, e.what(), {"resolved.conf"}));
    throw;
  }

  const auto& system = dae::system_by_name(cfg.system);
  RunReport rep = evaluate_run(cfg, *result.pair, system, result.trace);

  std::vector<std::string> files = {"resolved.conf"};
  auto emit = [&](const std::string& name, const std::string& content) {
    write_file_atomic(join_path(out_dir, name), content);
    files.push_back(name);
  };
  emit("trace.csv", trace_csv(result.trace));
  emit("ae.csv", ae_csv(rep));
  emit("re.csv", re_csv(rep));
  emit("summary.csv", summary_csv(rep));
  emit("driftoff.csv", driftoff_table_csv(rep));

  net::CheckpointInfo info;
  info.kind = cfg.net;
  info.system = cfg.system;
  info.form = cfg.form;
  info.diff_shape = cfg.diff_shape;
  info.alg_shape = cfg.net == "kan" ? cfg.alg_shape : std::vector<int>{};
  info.grid_g = cfg.grid_g;
  info.grid_k = cfg.grid_k;
  info.seed = cfg.seed;
  info.count = result.trace.final_parameters.size();
  net::save_checkpoint(join_path(out_dir, "params.bin"), info,
                       result.trace.final_parameters);
  files.push_back("params.bin");

  for (std::size_t j = 0; j < rep.variable_names.size(); ++j)
    emit("ae_" + rep.variable_names[j] + ".svg", ae_plot_svg(rep, j));
  emit("driftoff.svg", driftoff_panel_svg(rep));

  files.push_back("MANIFEST.txt");
  write_file_atomic(join_path(out_dir, "MANIFEST.txt"),
                    manifest_text(cfg, "complete", &result.trace, "", files));
  return rep;
}

void run_driftoff(double horizon, double rtol, const std::string& out_dir) {
  require(horizon > 0.0, "driftoff: horizon must be positive");
  require(rtol > 0.0, "driftoff: rtol must be positive");
  ensure_dir(out_dir);
  ode::IntegratorSettings settings;
  settings.rtol = rtol;
  settings.atol = rtol;
  const ode::DriftTable table = ode::pendulum_driftoff(settings, horizon);
  std::ostringstream out;
  out << "t,c3_residual,c2_residual\n";
  for (const auto& row : table.rows) {
    out << format_double(row.t) << "," << format_double(row.c3) << ","
        << format_double(row.c2) << "\n";
  }
  write_file_atomic(join_path(out_dir, "drift_table.csv"), out.str());
}

}  // namespace kandae::report
