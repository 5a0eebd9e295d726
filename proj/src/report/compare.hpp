#pragma once

#include <string>
#include <vector>

namespace kandae::report {

struct RunSummary {
  std::string system;
  std::string net;
  int form = 0;
  std::vector<std::string> variables;
  std::vector<double> re;
};

// reads resolved.conf and re.csv from a finished run directory
RunSummary read_run_summary(const std::string& run_dir);

// rows (model, form) sorted kan before mlp, index 3 down to 1; one RE column
// per variable; all runs must be on the same system
std::string comparison_table_csv(const std::vector<std::string>& run_dirs);

void write_comparison(const std::vector<std::string>& run_dirs,
                      const std::string& out_path);

}  // namespace kandae::report
