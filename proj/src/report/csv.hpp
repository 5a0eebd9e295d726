#pragma once

#include <string>

#include "report/grid_eval.hpp"
#include "train/trainer.hpp"

namespace kandae::report {

// every float is serialized with 17 significant digits
std::string format_double(double v);

// write-temp-rename so readers never observe a partial file
void write_file_atomic(const std::string& path, const std::string& content);

std::string ae_csv(const RunReport& rep);
std::string re_csv(const RunReport& rep);
std::string summary_csv(const RunReport& rep);
std::string driftoff_table_csv(const RunReport& rep);
std::string trace_csv(const train::TrainingTrace& trace);

}  // namespace kandae::report
