#include "report/compare.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "common.hpp"
#include "report/csv.hpp"
#include "strutil.hpp"
#include "train/config.hpp"

namespace kandae::report {

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

RunSummary read_run_summary(const std::string& run_dir) {
  namespace fs = std::filesystem;
  const train::TrainingConfig cfg =
      train::load_config((fs::path(run_dir) / "resolved.conf").string());
  RunSummary rs;
  rs.system = cfg.system;
  rs.net = cfg.net;
  rs.form = cfg.form;

  const std::string text = slurp((fs::path(run_dir) / "re.csv").string());
  std::istringstream in(text);
  std::string line;
  require(static_cast<bool>(std::getline(in, line)) && trim(line) == "variable,re",
          "re.csv in '" + run_dir + "': bad header");
  while (std::getline(in, line)) {
    const std::string s = trim(line);
    if (s.empty()) continue;
    const auto comma = s.find(',');
    require(comma != std::string::npos, "re.csv in '" + run_dir + "': bad row");
    rs.variables.push_back(s.substr(0, comma));
    try {
      rs.re.push_back(std::stod(s.substr(comma + 1)));
    } catch (const std::exception&) {
      fail("re.csv in '" + run_dir + "': bad value in row '" + s + "'");
    }
  }
  require(!rs.variables.empty(), "re.csv in '" + run_dir + "': no rows");
  return rs;
}

std::string comparison_table_csv(const std::vector<std::string>& run_dirs) {
  require(!run_dirs.empty(), "compare: need at least one run directory");
  std::vector<RunSummary> runs;
  runs.reserve(run_dirs.size());
  for (const auto& dir : run_dirs) runs.push_back(read_run_summary(dir));

  for (const auto& r : runs) {
    require(r.system == runs.front().system,
            "compare: runs mix systems '" + runs.front().system + "' and '" + r.system + "'");
    require(r.variables == runs.front().variables,
            "compare: runs disagree on variable names");
  }
  std::stable_sort(runs.begin(), runs.end(), [](const RunSummary& a, const RunSummary& b) {
    if (a.net != b.net) return a.net < b.net;
    return a.form > b.form;
  });
  for (std::size_t i = 1; i < runs.size(); ++i)
    require(runs[i].net != runs[i - 1].net || runs[i].form != runs[i - 1].form,
            "compare: duplicate (model, form) pair");

  std::ostringstream out;
  out << "model,form";
  for (const auto& v : runs.front().variables) out << "," << v;
  out << "\n";
  for (const auto& r : runs) {
    out << r.net << "," << r.form;
    for (double re : r.re) out << "," << format_double(re);
    out << "\n";
  }
  return out.str();
}

void write_comparison(const std::vector<std::string>& run_dirs,
                      const std::string& out_path) {
  write_file_atomic(out_path, comparison_table_csv(run_dirs));
}

}  // namespace kandae::report
