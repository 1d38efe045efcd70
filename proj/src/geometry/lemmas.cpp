#include "obslab/geometry/lemmas.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "obslab/core/errors.hpp"

namespace obslab {

namespace {

std::vector<double> radius_sample(double r_max, int samples) {
  std::vector<double> r{0.0};
  const double lo = std::log(1e-6 * r_max);
  const double hi = std::log(r_max);
  for (int k = 0; k < samples; ++k) r.push_back(std::exp(lo + (hi - lo) * k / (samples - 1)));
  return r;
}

}  // namespace

DensityUpgrade density_upgrade(double gamma, const Density& rho1, const Density& rho2, int d, double r_max,
                               int samples) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw PreconditionError("gamma must lie in (0, 1]");
  if (d < 1 || d > 3) throw PreconditionError("dimension must be 1, 2 or 3");
  for (double r : radius_sample(r_max, samples))
    if (rho1(r) > rho2(r))
      throw PreconditionError("density ordering rho1 <= rho2 fails at r = " + std::to_string(r),
                              "0 < rho1(x) <= rho2(x) for all x");
  return {gamma / std::pow(9.0, d), rho2.scaled(3.0)};
}

DualityReport duality_check(const Density& rho1, const Density& rho2, double C1, double C2, double t_max,
                            int samples) {
  if (!(C1 > 0.0) || !(C2 > 0.0) || !(t_max > 0.0))
    throw PreconditionError("duality check needs C1, C2, t_max > 0");
  DualityReport rep;
  rep.min_slack = std::numeric_limits<double>::infinity();
  rep.t = radius_sample(t_max, samples);
  for (double t : rep.t) {
    const double s = C1 / rho1(C2 / rho2(t)) - t;
    rep.slack.push_back(s);
    if (s < rep.min_slack) {
      rep.min_slack = s;
      rep.argmin = t;
    }
  }
  rep.verdict = true;
  for (std::size_t i = 0; i < rep.t.size(); ++i)
    if (rep.slack[i] < -1e-12 * (1.0 + rep.t[i])) rep.verdict = false;
  return rep;
}

}  // namespace obslab
