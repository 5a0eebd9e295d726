#pragma once

#include <cmath>
#include <vector>

#include "../ad/record.hpp"
#include "../common.hpp"

namespace kandae::bspline {

// Uniform extended knot grid: G intervals of width h on [a, b], degree k,
// knots running from a - k*h to b + k*h (G + 2k + 1 of them), G + k basis
// functions.
class SplineGrid {
public:
  static SplineGrid make(double a, double b, int intervals, int degree);

  double a() const { return a_; }
  double b() const { return b_; }
  int intervals() const { return g_; }
  int degree() const { return k_; }
  double spacing() const { return h_; }
  int basis_count() const { return g_ + k_; }
  const std::vector<double>& knots() const { return knots_; }

  double clamp(double x) const { return x < a_ ? a_ : (x > b_ ? b_ : x); }

  // knot interval index j with knots[j] <= x < knots[j+1], restricted to the
  // core span so every x in [a, b] lands in a full-support interval
  int locate(double x) const {
    int j = k_ + static_cast<int>(std::floor((x - a_) / h_));
    if (j < k_) j = k_;
    if (j > g_ + k_ - 1) j = g_ + k_ - 1;
    return j;
  }

private:
  SplineGrid() = default;
  double a_ = 0.0, b_ = 0.0, h_ = 0.0;
  int g_ = 0, k_ = 0;
  std::vector<double> knots_;
};

inline constexpr int kMaxDegree = 7;

// de Boor triangle over the k+1 basis functions that are nonzero on the
// interval containing x. `xp` is the primal used for interval location (the
// caller clamps). Writes N_{s0}(x) .. N_{s0+k}(x) into vals and returns s0.
template <class T>
int basis_window(const SplineGrid& grid, const T& x, double xp, T* vals) {
  const int k = grid.degree();
  const int j = grid.locate(xp);
  const std::vector<double>& t = grid.knots();
  T left[kMaxDegree + 1];
  T right[kMaxDegree + 1];
  vals[0] = T(1.0);
  for (int r = 1; r <= k; ++r) {
    left[r] = x - t[static_cast<std::size_t>(j + 1 - r)];
    right[r] = t[static_cast<std::size_t>(j + r)] - x;
    const double inv = 1.0 / (static_cast<double>(r) * grid.spacing());
    T saved(0.0);
    for (int i = 0; i < r; ++i) {
      T temp = vals[i] * inv;
      vals[i] = saved + right[i + 1] * temp;
      saved = left[r - i] * temp;
    }
    vals[r] = saved;
  }
  return j - k;
}

// All G + k basis values at t (t clamped to [a, b] first); at most k+1 nonzero.
std::vector<double> basis_values(const SplineGrid& grid, double t);

inline double silu(double x) { return x / (1.0 + std::exp(-x)); }
inline ad::Scalar silu(const ad::Scalar& x) { return x * logistic(x); }

}  // namespace kandae::bspline
