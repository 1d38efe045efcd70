#pragma once

#include <cstddef>

namespace obslab {

// inf of |tau^s - lambda| / (D (lambda + D^s)^{1 - 1/s}) over the grid
// tau, lambda in {0, h, ..., max} restricted to |tau - lambda^{1/s}| > D.
struct AlgebraReport {
  double s = 0.0;
  double D = 0.0;
  double inf_ratio = 0.0;
  double argmin_tau = 0.0;
  double argmin_lambda = 0.0;
  std::size_t admissible = 0;
  bool verdict = false;  // inf_ratio > 0
};

AlgebraReport algebra_scan(double s, double D, double tau_max, double lambda_max, int grid_steps);

}  // namespace obslab
