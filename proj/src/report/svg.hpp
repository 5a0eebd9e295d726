#pragma once

#include <string>
#include <vector>

#include "report/grid_eval.hpp"

namespace kandae::report {

struct PlotSeries {
  std::string label;
  const std::vector<double>* xs = nullptr;
  const std::vector<double>* ys = nullptr;
};

// single panel with a log10 y-axis; series values are clamped below at 1e-18
std::string log_line_plot_svg(const std::string& title, const std::string& x_label,
                              const std::vector<PlotSeries>& series);

// |exact - predicted| over time for one variable
std::string ae_plot_svg(const RunReport& rep, std::size_t var_index);

// constraint residuals of levels 3, 2, 1 side by side
std::string driftoff_panel_svg(const RunReport& rep);

}  // namespace kandae::report
