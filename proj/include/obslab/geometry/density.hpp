#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "obslab/core/grid.hpp"

namespace obslab {

// Positive continuous radial weight rho(|x|).
//
// The stored profile is one of the named families; scaled() and dilated()
// wrap it as  factor * base(r / dilation) , which keeps every derived density
// (3 rho_2, r rho(x / r), ...) exact rather than tabulated.
class Density {
 public:
  enum class Family { constant, power_capped, scaled_power, custom };

  static Density constant(double a);
  // min(1, r^-alpha)
  static Density power_capped(double alpha);
  // min(L, L^{1+beta} r^-beta)
  static Density scaled_power(double L, double beta);
  // Piecewise linear through (radii[i], values[i]); radii start at 0 and
  // increase strictly; constant beyond the last radius. If lipschitz > 0 the
  // table is rejected when adjacent values jump by more than lipschitz * step.
  static Density custom(std::vector<double> radii, std::vector<double> values, double lipschitz = 0.0);

  double operator()(double r) const noexcept;
  double at(const Point& x, int d) const noexcept { return (*this)(norm(x, d)); }

  // c * rho
  Density scaled(double c) const;
  // r * rho(x / r)
  Density dilated(double r) const;

  Family family() const noexcept { return family_; }
  double factor() const noexcept { return factor_; }
  double dilation() const noexcept { return dilation_; }
  std::string describe() const;

 private:
  Density(Family f, double p, double q) : family_(f), p_(p), q_(q) {}
  double base(double r) const noexcept;

  Family family_;
  double p_ = 0.0;
  double q_ = 0.0;
  double factor_ = 1.0;
  double dilation_ = 1.0;
  std::vector<double> radii_;
  std::vector<double> values_;
};

// Named construction used by the config layer: "constant" {a},
// "power_capped" {alpha}, "scaled_power" {L, beta}.
Density make_density(std::string_view family, std::span<const double> params);

}  // namespace obslab
