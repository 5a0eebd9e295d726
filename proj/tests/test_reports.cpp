#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "net/checkpoint.hpp"
#include "report/compare.hpp"
#include "report/csv.hpp"
#include "report/experiment.hpp"
#include "report/svg.hpp"

namespace fs = std::filesystem;
using kandae::net::NetKind;
using kandae::net::SolverPair;
using kandae::report::EvaluationGrid;
using kandae::report::RunReport;
using kandae::train::TrainingConfig;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path fresh_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

TrainingConfig tiny_config() {
  TrainingConfig cfg;
  cfg.system = "particle";
  cfg.form = 3;
  cfg.net = "kan";
  cfg.diff_shape = {1, 3, 4};
  cfg.alg_shape = {1, 2, 1};
  cfg.n_f = 10;
  cfg.epochs = 5;
  cfg.eval_every = 5;
  cfg.n_test = 50;
  cfg.seed = 21;
  return cfg;
}

}  // namespace

TEST_SUITE("reports") {

TEST_CASE("evaluation grid") {
  const EvaluationGrid g = EvaluationGrid::uniform(2.0, 5);
  REQUIRE(g.times.size() == 5);
  CHECK(g.times.front() == 0.0);
  CHECK(g.times.back() == 2.0);
  CHECK(g.times[2] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(EvaluationGrid::uniform(2.0, 1), kandae::Error);
  CHECK_THROWS_AS(EvaluationGrid::uniform(-1.0, 5), kandae::Error);
}

TEST_CASE("zero networks give the constant particle drift curves") {
  const auto& particle = kandae::dae::system_by_name("particle");
  SolverPair pair(NetKind::kan, {1, 3, 4}, {1, 2, 1}, 4, 1, 1.0, 5, 3);
  const auto curves =
      kandae::report::driftoff_curves(pair, particle, EvaluationGrid::uniform(1.0, 20));
  for (double v : curves[2]) CHECK(v == 1.0);  // |0 + 0 - 1|
  for (double v : curves[1]) CHECK(v == 0.0);
  for (double v : curves[0]) CHECK(v == 0.0);
}

TEST_CASE("run experiment writes the full deterministic artifact set") {
  const TrainingConfig cfg = tiny_config();
  const fs::path d1 = fresh_dir("kandae_run_a");
  const fs::path d2 = fresh_dir("kandae_run_b");
  const RunReport rep = kandae::report::run_experiment(cfg, d1.string());
  kandae::report::run_experiment(cfg, d2.string());

  REQUIRE(rep.times.size() == 50);
  CHECK(rep.times.front() == 0.0);
  CHECK(rep.times.back() == cfg.t_end);
  REQUIRE(rep.variable_names.size() == 5);
  for (const auto& curve : rep.ae) CHECK(curve.size() == 50);
  for (const auto& level : rep.drift) CHECK(level.size() == 50);
  for (double re : rep.re) CHECK(re >= 0.0);

  const char* files[] = {"resolved.conf", "trace.csv",   "ae.csv",
                         "re.csv",        "summary.csv", "driftoff.csv",
                         "params.bin",    "ae_u1.svg",   "ae_lambda.svg",
                         "driftoff.svg",  "MANIFEST.txt"};
  for (const char* f : files) {
    CAPTURE(f);
    CHECK(fs::exists(d1 / f));
    if (std::string(f) != "MANIFEST.txt")  // manifest carries wall time
      CHECK(slurp(d1 / f) == slurp(d2 / f));
  }
  CHECK(slurp(d1 / "MANIFEST.txt").find("status = complete") != std::string::npos);
  CHECK(!fs::exists(d1 / "ae.csv.tmp"));

  // schema spot checks
  std::istringstream re_in(slurp(d1 / "re.csv"));
  std::string line;
  std::getline(re_in, line);
  CHECK(line == "variable,re");
  int rows = 0;
  while (std::getline(re_in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 5);

  std::istringstream ae_in(slurp(d1 / "ae.csv"));
  std::getline(ae_in, line);
  CHECK(line == "t,u1,u2,z1,z2,lambda");
  std::istringstream drift_in(slurp(d1 / "driftoff.csv"));
  std::getline(drift_in, line);
  CHECK(line == "t,level1,level2,level3");
  std::istringstream trace_in(slurp(d1 / "trace.csv"));
  std::getline(trace_in, line);
  CHECK(line == "iteration,loss_total,mse_f,mse_i,grad_norm");

  // loading the checkpoint reproduces the trained prediction exactly
  const auto [info, values] = kandae::net::load_checkpoint((d1 / "params.bin").string());
  CHECK(info.kind == "kan");
  CHECK(info.system == "particle");
  SolverPair reloaded(NetKind::kan, cfg.diff_shape, cfg.alg_shape, 4, 1, cfg.t_end,
                      cfg.grid_g, cfg.grid_k);
  reloaded.load_parameters(values);
  const std::size_t k = 23;
  const auto e = reloaded.eval(rep.times[k]);
  CHECK(e.u[0] == rep.predicted[0][k]);
  CHECK(e.z[0] == rep.predicted[4][k]);

  fs::remove_all(d1);
  fs::remove_all(d2);
}

TEST_CASE("failed training still leaves a manifest") {
  TrainingConfig cfg = tiny_config();
  cfg.diff_shape = {1, 3};  // width 3 output cannot drive four differential variables
  const fs::path dir = fresh_dir("kandae_run_fail");
  CHECK_THROWS_AS(kandae::report::run_experiment(cfg, dir.string()), kandae::Error);
  CHECK(fs::exists(dir / "resolved.conf"));
  const std::string manifest = slurp(dir / "MANIFEST.txt");
  CHECK(manifest.find("status = failed") != std::string::npos);
  CHECK(manifest.find("error = ") != std::string::npos);
  CHECK(!fs::exists(dir / "trace.csv"));
  fs::remove_all(dir);
}

TEST_CASE("comparison table") {
  TrainingConfig kan3 = tiny_config();
  TrainingConfig kan2 = tiny_config();
  kan2.form = 2;
  TrainingConfig mlp3 = tiny_config();
  mlp3.net = "mlp";
  mlp3.diff_shape = {1, 6, 5};

  const fs::path base = fresh_dir("kandae_cmp");
  kandae::report::run_experiment(kan3, (base / "kan3").string());
  kandae::report::run_experiment(kan2, (base / "kan2").string());
  kandae::report::run_experiment(mlp3, (base / "mlp3").string());

  // input order must not matter
  const std::string table = kandae::report::comparison_table_csv(
      {(base / "mlp3").string(), (base / "kan2").string(), (base / "kan3").string()});
  std::istringstream in(table);
  std::string line;
  std::getline(in, line);
  CHECK(line == "model,form,u1,u2,z1,z2,lambda");
  std::getline(in, line);
  CHECK(line.substr(0, 6) == "kan,3,");
  std::getline(in, line);
  CHECK(line.substr(0, 6) == "kan,2,");
  std::getline(in, line);
  CHECK(line.substr(0, 6) == "mlp,3,");
  CHECK(!std::getline(in, line).good());

  CHECK_THROWS_AS(kandae::report::comparison_table_csv(
                      {(base / "kan3").string(), (base / "kan3").string()}),
                  kandae::Error);
  CHECK_THROWS_AS(kandae::report::comparison_table_csv({}), kandae::Error);
  CHECK_THROWS_AS(kandae::report::comparison_table_csv({(base / "missing").string()}),
                  kandae::Error);
  fs::remove_all(base);
}

TEST_CASE("svg plots are deterministic and log scaled") {
  std::vector<double> xs(50), flat(50, 1e-5);
  for (std::size_t i = 0; i < xs.size(); ++i)
    xs[i] = static_cast<double>(i) / 49.0;
  kandae::report::PlotSeries s{"err", &xs, &flat};
  const std::string svg = kandae::report::log_line_plot_svg("flat", "t", {s});
  CHECK(svg == kandae::report::log_line_plot_svg("flat", "t", {s}));
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("1e-5") != std::string::npos);

  // a constant series renders as a horizontal polyline
  const auto pts = svg.find("points=\"");
  REQUIRE(pts != std::string::npos);
  const auto end = svg.find('"', pts + 8);
  const std::string points = svg.substr(pts + 8, end - pts - 8);
  std::istringstream pin(points);
  std::string pair0, cur, last;
  pin >> pair0;
  while (pin >> cur) last = cur;
  CHECK(pair0.substr(pair0.find(',')) == last.substr(last.find(',')));

  std::vector<double> empty;
  kandae::report::PlotSeries bad{"x", &empty, &empty};
  CHECK_THROWS_AS(kandae::report::log_line_plot_svg("t", "t", {bad}), kandae::Error);
}

TEST_CASE("driftoff table file") {
  const fs::path dir = fresh_dir("kandae_drift");
  kandae::report::run_driftoff(1.0, 1e-6, dir.string());
  const std::string text = slurp(dir / "drift_table.csv");
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  CHECK(line == "t,c3_residual,c2_residual");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows >= 3);
  CHECK_THROWS_AS(kandae::report::run_driftoff(-1.0, 1e-6, dir.string()), kandae::Error);
  fs::remove_all(dir);
}

TEST_CASE("atomic write") {
  const fs::path dir = fresh_dir("kandae_atomic");
  fs::create_directories(dir);
  const std::string path = (dir / "x.csv").string();
  kandae::report::write_file_atomic(path, "a,b\n1,2\n");
  CHECK(slurp(path) == "a,b\n1,2\n");
  kandae::report::write_file_atomic(path, "new\n");
  CHECK(slurp(path) == "new\n");
  CHECK(!fs::exists(path + ".tmp"));
  CHECK_THROWS_AS(
      kandae::report::write_file_atomic((dir / "no_dir" / "x.csv").string(), "z"),
      kandae::Error);
  fs::remove_all(dir);
}

}
