#include "obslab/observability/miller.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "obslab/core/errors.hpp"

namespace obslab {

MillerReport miller_probe(const GramianSpec& base, double M, double m, std::vector<double> T_list, double lambda_lo,
                          double lambda_hi, const SolveOptions& opt) {
  if (!(M >= 0.0) || !(m > 0.0)) throw PreconditionError("miller_probe needs M >= 0 and m > 0");
  if (T_list.empty()) throw PreconditionError("miller_probe needs at least one T");
  for (double T : T_list)
    if (!(T > 0.0)) throw PreconditionError("miller_probe times must be positive");
  std::sort(T_list.begin(), T_list.end());
  constexpr double pi2 = std::numbers::pi * std::numbers::pi;
  MillerReport rep;
  rep.M = M;
  rep.m = m;
  rep.lambda_lo = lambda_lo;
  rep.lambda_hi = lambda_hi;
  rep.threshold = std::sqrt(M * (pi2 + 0.1));
  rep.verdict = true;
  for (double T : T_list) {
    GramianSpec spec = base;
    spec.T = T;
    MillerRow row{.T = T};
    row.constant = obs_constant(spec, opt).constant;
    const double den = T * T - M * pi2;
    row.below_threshold = !(den > 0.0);
    row.bound_shape = row.below_threshold ? std::numeric_limits<double>::quiet_NaN() : m * T / den;
    if (T > rep.threshold && !std::isfinite(row.constant)) rep.verdict = false;
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace obslab
