#include "obslab/observability/majorant.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "obslab/core/errors.hpp"

namespace obslab {

AffineMajorant tightest_affine_majorant(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) throw PreconditionError("majorant needs matching nonempty samples");
  AffineMajorant out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!std::isfinite(x[i]) || !std::isfinite(y[i])) return out;

  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](double a, double b) {
    if (b < 0.0) return;
    double gap = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double g = a + b * x[i] - y[i];
      if (g < -1e-12 * (1.0 + std::fabs(y[i]))) return;
      gap = std::max(gap, g);
    }
    const double cost = n * a + b * sx - sy;
    if (cost < best) {
      best = cost;
      out.intercept = a;
      out.slope = b;
      out.max_gap = gap;
    }
  };
  consider(*std::max_element(y.begin(), y.end()), 0.0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      if (x[i] == x[j]) continue;
      const double b = (y[j] - y[i]) / (x[j] - x[i]);
      consider(y[i] - b * x[i], b);
    }
  out.exists = std::isfinite(best);
  return out;
}

}  // namespace obslab
