#include "report/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "common.hpp"
#include "report/metrics.hpp"

namespace kandae::report {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(out.good(), "cannot open '" + tmp + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    require(out.good(), "write to '" + tmp + "' failed");
  }
  require(std::rename(tmp.c_str(), path.c_str()) == 0,
          "cannot rename '" + tmp + "' to '" + path + "'");
}

std::string ae_csv(const RunReport& rep) {
  std::ostringstream out;
  out << "t";
  for (const auto& name : rep.variable_names) out << "," << name;
  out << "\n";
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    out << format_double(rep.times[i]);
    for (const auto& curve : rep.ae) out << "," << format_double(curve[i]);
    out << "\n";
  }
  return out.str();
}

std::string re_csv(const RunReport& rep) {
  std::ostringstream out;
  out << "variable,re\n";
  for (std::size_t j = 0; j < rep.variable_names.size(); ++j)
    out << rep.variable_names[j] << "," << format_double(rep.re[j]) << "\n";
  return out.str();
}

std::string summary_csv(const RunReport& rep) {
  std::ostringstream out;
  out << "variable,ae_sum,ae_max,re\n";
  for (std::size_t j = 0; j < rep.variable_names.size(); ++j) {
    out << rep.variable_names[j] << "," << format_double(series_sum(rep.ae[j])) << ","
        << format_double(series_max(rep.ae[j])) << "," << format_double(rep.re[j])
        << "\n";
  }
  return out.str();
}

std::string driftoff_table_csv(const RunReport& rep) {
  std::ostringstream out;
  out << "t,level1,level2,level3\n";
  for (std::size_t i = 0; i < rep.times.size(); ++i) {
    out << format_double(rep.times[i]);
    for (const auto& level : rep.drift) out << "," << format_double(level[i]);
    out << "\n";
  }
  return out.str();
}

std::string trace_csv(const train::TrainingTrace& trace) {
  std::ostringstream out;
  out << "iteration,loss_total,mse_f,mse_i,grad_norm\n";
  for (const auto& row : trace.rows) {
    out << row.iteration << "," << format_double(row.loss_total) << ","
        << format_double(row.mse_f) << "," << format_double(row.mse_i) << ","
        << format_double(row.grad_norm) << "\n";
  }
  return out.str();
}

}  // namespace kandae::report
