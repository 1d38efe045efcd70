#pragma once

#include <vector>

#include "obslab/observability/gramian.hpp"

namespace obslab {

struct MillerRow {
  double T = 0.0;
  double constant = 0.0;
  double bound_shape = 0.0;  // m T / (T^2 - M pi^2), NaN below threshold
  bool below_threshold = false;
};

struct MillerReport {
  double M = 0.0;
  double m = 0.0;
  double lambda_lo = 0.0;  // range over which (M, m) was certified
  double lambda_hi = 0.0;
  double threshold = 0.0;  // sqrt(M (pi^2 + 0.1))
  std::vector<MillerRow> rows;
  bool verdict = false;  // finite constant for every T above threshold
};

// Measures obs_constant for each T with `base` (its T is ignored).
MillerReport miller_probe(const GramianSpec& base, double M, double m, std::vector<double> T_list,
                          double lambda_lo, double lambda_hi, const SolveOptions& opt = {});

}  // namespace obslab
