#include "obslab/observability/algebra.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "obslab/core/errors.hpp"
#include "obslab/simd/kernels.hpp"

namespace obslab {

AlgebraReport algebra_scan(double s, double D, double tau_max, double lambda_max, int grid_steps) {
  if (!(s > 0.0) || !(D > 0.0)) throw PreconditionError("algebra_scan needs s > 0 and D > 0");
  if (!(tau_max > 0.0) || !(lambda_max > 0.0) || grid_steps < 1)
    throw PreconditionError("algebra_scan needs a nonempty positive grid");
  const std::size_t n = static_cast<std::size_t>(grid_steps) + 1;
  const double ht = tau_max / grid_steps;
  const double hl = lambda_max / grid_steps;
  std::vector<double> tau(n), power(n);
  for (std::size_t i = 0; i < n; ++i) {
    tau[i] = static_cast<double>(i) * ht;
    power[i] = std::pow(tau[i], s);
  }
  const auto& k = simd::kernels();
  AlgebraReport rep{.s = s, .D = D, .inf_ratio = std::numeric_limits<double>::infinity()};
  std::size_t best_row = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double lambda = static_cast<double>(j) * hl;
    const double root = std::pow(lambda, 1.0 / s);
    const double inv_den = 1.0 / (D * std::pow(lambda + std::pow(D, s), 1.0 - 1.0 / s));
    const auto row = k.admissible_gap_min(power.data(), tau.data(), n, lambda, root, D, inv_den);
    rep.admissible += row.count;
    if (row.value < rep.inf_ratio) {
      rep.inf_ratio = row.value;
      best_row = j;
    }
  }
  if (rep.admissible == 0) throw PreconditionError("admissible region |tau - lambda^{1/s}| > D is empty on the grid");
  // Locate the argmin within the winning row.
  const double lambda = static_cast<double>(best_row) * hl;
  const double root = std::pow(lambda, 1.0 / s);
  const double inv_den = 1.0 / (D * std::pow(lambda + std::pow(D, s), 1.0 - 1.0 / s));
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(tau[i] - root) <= D) continue;
    const double v = std::fabs(power[i] - lambda) * inv_den;
    if (v < best) {
      best = v;
      rep.argmin_tau = tau[i];
    }
  }
  rep.argmin_lambda = lambda;
  rep.verdict = rep.inf_ratio > 0.0;
  return rep;
}

}  // namespace obslab
