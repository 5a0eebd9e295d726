#include "train/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "strutil.hpp"

namespace kandae::train {

namespace {

std::uint64_t parse_u64(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    require(!v.empty() && v[0] != '-', "negative");
    const std::uint64_t x = std::stoull(v, &pos);
    require(pos == v.size(), "trailing characters");
    return x;
  } catch (const std::exception&) {
    fail("config: bad unsigned integer for '" + key + "': " + v);
  }
}

int parse_i(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const int x = std::stoi(v, &pos);
    require(pos == v.size(), "trailing characters");
    return x;
  } catch (const std::exception&) {
    fail("config: bad integer for '" + key + "': " + v);
  }
}

double parse_f(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double x = std::stod(v, &pos);
    require(pos == v.size(), "trailing characters");
    return x;
  } catch (const std::exception&) {
    fail("config: bad number for '" + key + "': " + v);
  }
}

}  // namespace

void TrainingConfig::validate() const {
  require(system == "pendulum" || system == "particle" || system == "robot",
          "config: unknown system '" + system + "'");
  require(form >= 1 && form <= 3, "config: form must be 1, 2 or 3");
  require(net == "kan" || net == "mlp", "config: net must be kan or mlp");
  require(diff_shape.size() >= 2 && diff_shape.front() == 1,
          "config: diff_shape must start with 1 and have at least two layers");
  for (int w : diff_shape) require(w >= 1, "config: diff_shape widths must be positive");
  if (net == "kan") {
    require(alg_shape.size() >= 2 && alg_shape.front() == 1,
            "config: alg_shape must start with 1 and have at least two layers");
    for (int w : alg_shape) require(w >= 1, "config: alg_shape widths must be positive");
  }
  require(grid_g >= 1, "config: grid_g must be >= 1");
  require(grid_k >= 1, "config: grid_k must be >= 1");
  require(t_end > 0.0, "config: t_end must be positive");
  require(n_i >= 1, "config: n_i must be >= 1");
  require(n_f >= 1, "config: n_f must be >= 1");
  require(epochs >= 1, "config: epochs must be >= 1");
  require(eval_every >= 1, "config: eval_every must be >= 1");
  require(n_test >= 2, "config: n_test must be >= 2");
  require(lbfgs.history >= 1, "config: lbfgs_m must be >= 1");
  require(lbfgs.c1 > 0.0 && lbfgs.c1 < lbfgs.c2 && lbfgs.c2 < 1.0,
          "config: need 0 < lbfgs_c1 < lbfgs_c2 < 1");
  require(lbfgs.max_line_search >= 1, "config: lbfgs_max_ls must be >= 1");
  require(lbfgs.grad_tol >= 0.0, "config: grad_tol must be >= 0");
  require(lbfgs.loss_tol >= 0.0, "config: loss_tol must be >= 0");
}

TrainingConfig parse_config(const std::string& text) {
  TrainingConfig cfg;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string s = trim(line);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    require(eq != std::string::npos,
            "config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string val = trim(s.substr(eq + 1));
    require(!key.empty() && !val.empty(),
            "config line " + std::to_string(lineno) + ": empty key or value");

    if (key == "system") cfg.system = val;
    else if (key == "form") cfg.form = parse_i(key, val);
    else if (key == "net") cfg.net = val;
    else if (key == "diff_shape") cfg.diff_shape = parse_int_list(val);
    else if (key == "alg_shape") cfg.alg_shape = parse_int_list(val);
    else if (key == "grid_g") cfg.grid_g = parse_i(key, val);
    else if (key == "grid_k") cfg.grid_k = parse_i(key, val);
    else if (key == "t_end") cfg.t_end = parse_f(key, val);
    else if (key == "n_i") cfg.n_i = parse_u64(key, val);
    else if (key == "n_f") cfg.n_f = parse_u64(key, val);
    else if (key == "epochs") cfg.epochs = parse_u64(key, val);
    else if (key == "seed") cfg.seed = parse_u64(key, val);
    else if (key == "eval_every") cfg.eval_every = parse_u64(key, val);
    else if (key == "n_test") cfg.n_test = parse_u64(key, val);
    else if (key == "lbfgs_m") cfg.lbfgs.history = parse_u64(key, val);
    else if (key == "lbfgs_c1") cfg.lbfgs.c1 = parse_f(key, val);
    else if (key == "lbfgs_c2") cfg.lbfgs.c2 = parse_f(key, val);
    else if (key == "lbfgs_max_ls") cfg.lbfgs.max_line_search = parse_i(key, val);
    else if (key == "grad_tol") cfg.lbfgs.grad_tol = parse_f(key, val);
    else if (key == "loss_tol") cfg.lbfgs.loss_tol = parse_f(key, val);
    else fail("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

TrainingConfig load_config(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string write_config(const TrainingConfig& cfg) {
  std::ostringstream out;
  char num[64];
  auto put_f = [&](const char* key, double v) {
    std::snprintf(num, sizeof num, "%.17g", v);
    out << key << " = " << num << "\n";
  };
  out << "system = " << cfg.system << "\n";
  out << "form = " << cfg.form << "\n";
  out << "net = " << cfg.net << "\n";
  out << "diff_shape = " << join_ints(cfg.diff_shape) << "\n";
  out << "alg_shape = " << join_ints(cfg.alg_shape) << "\n";
  out << "grid_g = " << cfg.grid_g << "\n";
  out << "grid_k = " << cfg.grid_k << "\n";
  put_f("t_end", cfg.t_end);
  out << "n_i = " << cfg.n_i << "\n";
  out << "n_f = " << cfg.n_f << "\n";
  out << "epochs = " << cfg.epochs << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "eval_every = " << cfg.eval_every << "\n";
  out << "n_test = " << cfg.n_test << "\n";
  out << "lbfgs_m = " << cfg.lbfgs.history << "\n";
  put_f("lbfgs_c1", cfg.lbfgs.c1);
  put_f("lbfgs_c2", cfg.lbfgs.c2);
  out << "lbfgs_max_ls = " << cfg.lbfgs.max_line_search << "\n";
  put_f("grad_tol", cfg.lbfgs.grad_tol);
  put_f("loss_tol", cfg.lbfgs.loss_tol);
  return out.str();
}

}  // namespace kandae::train
