#pragma once

#include <span>
#include <vector>

namespace kandae::report {

// ||exact - predicted||_2 / ||exact||_2 over matching sample points
double relative_error(std::span<const double> exact, std::span<const double> predicted);

// pointwise |exact_i - predicted_i|
std::vector<double> absolute_error_trajectory(std::span<const double> exact,
                                              std::span<const double> predicted);

double series_sum(std::span<const double> xs);
double series_max(std::span<const double> xs);

}  // namespace kandae::report
