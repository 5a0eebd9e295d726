#pragma once

namespace kandae::dae {

struct JacobiSncndn {
  double sn;
  double cn;
  double dn;
};

// Jacobi elliptic functions sn(u|m), cn(u|m), dn(u|m) for parameter
// m in [0, 1). AGM scale sequence with the phase back-recursion.
JacobiSncndn sncndn(double u, double m);

}  // namespace kandae::dae
