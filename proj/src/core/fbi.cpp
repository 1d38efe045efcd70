#include "obslab/core/fbi.hpp"

#include <cmath>
#include <numbers>

#include "obslab/core/errors.hpp"

namespace obslab {

namespace {

// Fraction of the mass of e^{-(t + tau)^2/(2h)} lying outside [a, b].
double window_leak(double a, double b, double tau, double h) {
  const double s = std::sqrt(2.0 * h);
  return 0.5 * (std::erfc((b + tau) / s) + std::erfc(-(a + tau) / s));
}

}  // namespace

std::complex<double> fbi_transform(const TimeSeries& gamma, double h, std::complex<double> z) {
  if (!(h > 0.0 && h < 1.0)) throw PreconditionError("FBI parameter h must lie in (0, 1)", "0 < h < 1");
  if (gamma.values.size() < 2 || !(gamma.dt > 0.0)) throw PreconditionError("FBI needs at least two time samples");
  const double leak = window_leak(gamma.t0, gamma.t_end(), z.real(), h);
  if (leak > 1e-12)
    throw PreconditionError("time grid does not cover the FBI window around t = -Re z",
                            "window mass outside grid <= 1e-12");

  const std::size_t n = gamma.values.size();
  std::complex<double> acc{};
  for (std::size_t k = 0; k < n; ++k) {
    const double t = gamma.t0 + gamma.dt * static_cast<double>(k);
    const std::complex<double> w = std::exp(-(z + t) * (z + t) / (2.0 * h));
    const double edge = (k == 0 || k + 1 == n) ? 0.5 : 1.0;
    acc += edge * w * gamma.values[k];
  }
  const double pref = std::pow(2.0, 0.25) / std::pow(2.0 * std::numbers::pi * h, 0.75);
  return pref * gamma.dt * acc;
}

}  // namespace obslab
