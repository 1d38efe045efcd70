#pragma once

// Cell counting in periodized closed balls.
//
// A ball B(c, r) is enumerated as rows along the last axis. Distances use the
// unwrapped cell coordinates, set membership uses the wrapped index, so a
// ball straddling the box edge continues on the opposite side.

#include <array>
#include <cstddef>
#include <vector>

#include "obslab/core/mask.hpp"

namespace obslab {

struct BallTally {
  std::size_t inside = 0;  // cells in the ball and in the set
  std::size_t total = 0;   // cells in the ball

  double ratio() const noexcept { return total == 0 ? 0.0 : static_cast<double>(inside) / total; }
};

// One row of a ball: leading wrapped indices, unwrapped column span [lo, hi].
struct BallRow {
  std::array<int, 3> lead{0, 0, 0};
  long lo = 0;
  long hi = -1;
};

// Visit every row of the closed ball B(center, radius) on `grid`.
// Requires radius <= extent / 4.
template <class Visit>
void for_each_ball_row(const GridSpec& grid, const Point& center, double radius, Visit&& visit);

// Counts of a materialized mask, via per-row prefix sums.
class MaskCounter {
 public:
  explicit MaskCounter(const Mask& mask);
  BallTally count(const Point& center, double radius) const;
  // Cells of the set among wrapped columns lo..hi (unwrapped, hi - lo < n).
  std::size_t row_count(std::size_t row, long lo, long hi) const;

 private:
  GridSpec grid_;
  std::vector<std::uint32_t> prefix_;  // (n + 1) entries per row
};

void require_ball_fits(const GridSpec& grid, double radius);

}  // namespace obslab

#include "obslab/geometry/balls_impl.hpp"
