#pragma once

#include <span>

namespace obslab {

// y_i <= a + b x_i for all i, b >= 0, minimizing sum (a + b x_i - y_i).
// The optimum is a line through one or two of the points.
struct AffineMajorant {
  double intercept = 0.0;
  double slope = 0.0;
  double max_gap = 0.0;  // largest a + b x_i - y_i
  bool exists = false;   // false when some y_i is not finite
};

AffineMajorant tightest_affine_majorant(std::span<const double> x, std::span<const double> y);

}  // namespace obslab
