#include "dae/elliptic.hpp"

#include <array>
#include <cmath>

#include "common.hpp"

namespace kandae::dae {

JacobiSncndn sncndn(double u, double m) {
  require(std::isfinite(u), "sncndn: non-finite argument");
  require(m >= 0.0 && m < 1.0, "sncndn: parameter m must lie in [0, 1)");

  if (m < 1e-16) {
    const double s = std::sin(u);
    return {s, std::cos(u), 1.0 - 0.5 * m * s * s};
  }

  // arithmetic-geometric mean of (1, sqrt(1-m)); c_n -> 0 quadratically
  constexpr int kMaxIter = 32;
  std::array<double, kMaxIter + 1> a{};
  std::array<double, kMaxIter + 1> c{};
  a[0] = 1.0;
  double b = std::sqrt(1.0 - m);
  c[0] = std::sqrt(m);
  int n = 0;
  while (n < kMaxIter && std::abs(c[n]) > 1e-15 * a[n]) {
    const double an = 0.5 * (a[n] + b);
    const double bn = std::sqrt(a[n] * b);
    c[n + 1] = 0.5 * (a[n] - b);
    a[n + 1] = an;
    b = bn;
    ++n;
  }
  require(n < kMaxIter, "sncndn: AGM failed to converge");

  // phase back-recursion: phi_{k-1} = (phi_k + asin(c_k/a_k sin phi_k)) / 2
  double phi = std::ldexp(a[n] * u, n);
  double phi1 = phi;
  for (int k = n; k >= 1; --k) {
    const double prev = 0.5 * (phi + std::asin(std::clamp(c[k] / a[k] * std::sin(phi), -1.0, 1.0)));
    phi1 = phi;
    phi = prev;
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  const double dn = cn / std::cos(phi1 - phi);
  return {sn, cn, dn};
}

}  // namespace kandae::dae
