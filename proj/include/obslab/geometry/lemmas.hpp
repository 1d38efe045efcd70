#pragma once

#include <vector>

#include "obslab/geometry/density.hpp"

namespace obslab {

struct DensityUpgrade {
  double gamma;  // gamma / 9^d
  Density rho;   // 3 rho_2
};

// A (gamma, rho_1)-thick set is (gamma / 9^d, 3 rho_2)-thick whenever
// rho_1 <= rho_2. The ordering is checked on a log-spaced radius sample in
// [0, r_max]; a violation throws.
DensityUpgrade density_upgrade(double gamma, const Density& rho1, const Density& rho2, int d,
                               double r_max = 1e6, int samples = 4000);

struct DualityReport {
  std::vector<double> t;
  std::vector<double> slack;  // C1 / rho1(C2 / rho2(t)) - t
  double min_slack = 0.0;
  double argmin = 0.0;
  bool verdict = false;  // min slack >= -1e-12 (1 + t)
};

// C1 / rho1(C2 / rho2(t)) >= t on t = 0 plus a log grid in [t_max 1e-6, t_max].
DualityReport duality_check(const Density& rho1, const Density& rho2, double C1, double C2, double t_max,
                            int samples = 2001);

}  // namespace obslab
