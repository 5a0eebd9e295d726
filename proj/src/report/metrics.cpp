#include "report/metrics.hpp"

#include <cmath>

#include "common.hpp"

namespace kandae::report {

double relative_error(std::span<const double> exact, std::span<const double> predicted) {
  require(exact.size() == predicted.size(), "relative_error: length mismatch");
  require(!exact.empty(), "relative_error: empty series");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double d = exact[i] - predicted[i];
    num += d * d;
    den += exact[i] * exact[i];
  }
  require(den > 0.0, "relative_error: exact series is identically zero");
  return std::sqrt(num) / std::sqrt(den);
}

std::vector<double> absolute_error_trajectory(std::span<const double> exact,
                                              std::span<const double> predicted) {
  require(exact.size() == predicted.size(), "absolute_error_trajectory: length mismatch");
  std::vector<double> out(exact.size());
  for (std::size_t i = 0; i < exact.size(); ++i)
    out[i] = std::fabs(exact[i] - predicted[i]);
  return out;
}

double series_sum(std::span<const double> xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s;
}

double series_max(std::span<const double> xs) {
  double m = 0.0;
  for (double x : xs) m = std::max(m, x);
  return m;
}

}  // namespace kandae::report
