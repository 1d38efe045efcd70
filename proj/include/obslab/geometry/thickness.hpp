#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "obslab/core/mask.hpp"
#include "obslab/geometry/density.hpp"

namespace obslab {

struct ThicknessReport {
  double gamma_requested = 0.0;
  Density rho = Density::constant(1.0);
  std::vector<Point> centers;
  std::vector<double> radii;   // rho(x) per center
  std::vector<double> ratios;  // |O cap B| / |B| by cell count
  std::vector<std::size_t> ball_cells;
  double min_ratio = 1.0;
  bool verdict = true;
  std::vector<std::size_t> violating;  // indices into centers
};

// Checks |O cap B(x, rho(x))| >= gamma |B(x, rho(x))| at each centre by
// counting cell centres in the periodized closed ball. Every ball must fit in
// a quarter of the box and contain at least one cell.
ThicknessReport thickness_check(const Mask& mask, double gamma, const Density& rho, std::span<const Point> centers);

// Centres on the lattice spacing * Z^d inside [-half_width, half_width]^d.
std::vector<Point> lattice_centers(int d, double spacing, double half_width);

// Uniform centres in [-half_width, half_width]^d.
std::vector<Point> random_centers(int d, std::size_t count, double half_width, std::uint64_t seed);

}  // namespace obslab
