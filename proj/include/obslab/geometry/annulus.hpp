#pragma once

#include <span>
#include <vector>

#include "obslab/core/mask.hpp"
#include "obslab/geometry/density.hpp"

namespace obslab {

// A_{lambda,beta,s} = {xi : ||xi| - lambda^{1/(2s)}| <= lambda^{-beta/(2s)}}.
// Built through mu = lambda^{1/s}, so A_{lambda,beta,s} and A_{mu,beta,1} are
// the same object, bit for bit.
struct Annulus {
  double radius;
  double half_width;

  static Annulus make(double lambda, double beta, double s = 1.0);
  bool contains(double xi_norm) const noexcept { return std::abs(xi_norm - radius) <= half_width; }
  double outer() const noexcept { return radius + half_width; }
};

// Materialized on the frequency lattice of `grid`. The outer radius must stay
// below Nyquist.
Mask annulus_mask(const GridSpec& grid, double lambda, double beta, double s = 1.0);

struct ThinnessReport {
  double lambda = 0.0;
  double beta = 0.0;
  double epsilon = 0.0;
  double L = 0.0;         // 3^{1+beta} C_d' / (epsilon omega_d)
  double lambda0 = 0.0;   // (2L + 1)^2
  bool forced = false;    // run below lambda0 on request
  std::vector<Point> centers;
  std::vector<double> ratios;
  std::vector<std::size_t> ball_cells;
  double max_ratio = 0.0;
  std::size_t argmax = 0;
  bool verdict = true;  // max_ratio <= epsilon
};

double thinness_scale(int d, double beta, double epsilon);
double thinness_threshold(int d, double beta, double epsilon);

// Counts lattice points of A_{lambda,beta} inside B(x, rho~(x)),
// rho~ = scaled_power(L, beta), at each frequency-space centre. The annulus is
// never materialized: each ball row is intersected with it in closed form, so
// lattices far larger than memory are fine.
ThinnessReport thinness_check(const GridSpec& grid, double lambda, double beta, double epsilon,
                              std::span<const Point> centers, bool force = false);

}  // namespace obslab
