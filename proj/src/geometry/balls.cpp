#include "obslab/geometry/balls.hpp"

#include <string>

#include "obslab/core/errors.hpp"

namespace obslab {

void require_ball_fits(const GridSpec& grid, double radius) {
  if (!(radius <= 0.25 * grid.extent()))
    throw PreconditionError("ball radius " + std::to_string(radius) + " exceeds a quarter of the box (" +
                                std::to_string(0.25 * grid.extent()) + ")",
                            "rho(x) <= box_len / 4");
}

MaskCounter::MaskCounter(const Mask& mask) : grid_(mask.grid()) {
  const std::size_t n = static_cast<std::size_t>(grid_.n());
  const std::size_t rows = grid_.size() / n;
  prefix_.resize(rows * (n + 1));
  const auto bits = mask.bits();
  for (std::size_t r = 0; r < rows; ++r) {
    std::uint32_t* p = prefix_.data() + r * (n + 1);
    const std::uint8_t* b = bits.data() + r * n;
    p[0] = 0;
    for (std::size_t j = 0; j < n; ++j) p[j + 1] = p[j] + b[j];
  }
}

std::size_t MaskCounter::row_count(std::size_t row, long lo, long hi) const {
  const long n = grid_.n();
  const std::uint32_t* p = prefix_.data() + row * static_cast<std::size_t>(n + 1);
  std::size_t total = 0;
  while (lo <= hi) {
    const long w = detail::wrap_index(lo, n);
    const long run = std::min(hi - lo, n - 1 - w);
    total += p[w + run + 1] - p[w];
    lo += run + 1;
  }
  return total;
}

BallTally MaskCounter::count(const Point& center, double radius) const {
  require_ball_fits(grid_, radius);
  const int d = grid_.dim();
  const std::size_t n = static_cast<std::size_t>(grid_.n());
  BallTally t;
  for_each_ball_row(grid_, center, radius, [&](const BallRow& row) {
    std::size_t r = 0;
    if (d == 2) r = static_cast<std::size_t>(row.lead[0]);
    if (d == 3) r = static_cast<std::size_t>(row.lead[0]) * n + static_cast<std::size_t>(row.lead[1]);
    t.total += static_cast<std::size_t>(row.hi - row.lo + 1);
    t.inside += row_count(r, row.lo, row.hi);
  });
  return t;
}

}  // namespace obslab
