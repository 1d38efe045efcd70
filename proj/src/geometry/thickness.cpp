#include "obslab/geometry/thickness.hpp"

#include <cmath>
#include <random>
#include <string>

#include "obslab/core/errors.hpp"
#include "obslab/geometry/balls.hpp"

namespace obslab {

ThicknessReport thickness_check(const Mask& mask, double gamma, const Density& rho, std::span<const Point> centers) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) throw PreconditionError("gamma must lie in [0, 1]");
  const GridSpec& g = mask.grid();
  const double half = 0.5 * g.extent();
  for (const auto& c : centers)
    for (int a = 0; a < g.dim(); ++a)
      if (c[a] < -half || c[a] > half) throw PreconditionError("thickness centre lies outside the box");

  MaskCounter counter(mask);
  ThicknessReport rep;
  rep.gamma_requested = gamma;
  rep.rho = rho;
  rep.centers.assign(centers.begin(), centers.end());
  rep.min_ratio = 1.0;
  for (std::size_t k = 0; k < centers.size(); ++k) {
    const double r = rho.at(centers[k], g.dim());
    const BallTally t = counter.count(centers[k], r);
    if (t.total == 0)
      throw PreconditionError("ball of radius " + std::to_string(r) + " contains no cell centre; refine the grid");
    rep.radii.push_back(r);
    rep.ratios.push_back(t.ratio());
    rep.ball_cells.push_back(t.total);
    rep.min_ratio = std::min(rep.min_ratio, t.ratio());
    if (t.ratio() < gamma) rep.violating.push_back(k);
  }
  rep.verdict = rep.min_ratio >= gamma;
  return rep;
}

std::vector<Point> lattice_centers(int d, double spacing, double half_width) {
  if (!(spacing > 0.0)) throw PreconditionError("centre spacing must be positive");
  const int k = static_cast<int>(std::floor(half_width / spacing + 1e-12));
  std::vector<Point> out;
  for (int i = -k; i <= k; ++i)
    for (int j = (d > 1 ? -k : 0); j <= (d > 1 ? k : 0); ++j)
      for (int l = (d > 2 ? -k : 0); l <= (d > 2 ? k : 0); ++l) out.push_back({i * spacing, j * spacing, l * spacing});
  return out;
}

std::vector<Point> random_centers(int d, std::size_t count, double half_width, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-half_width, half_width);
  std::vector<Point> out(count, Point{0.0, 0.0, 0.0});
  for (auto& p : out)
    for (int a = 0; a < d; ++a) p[a] = u(rng);
  return out;
}

}  // namespace obslab
