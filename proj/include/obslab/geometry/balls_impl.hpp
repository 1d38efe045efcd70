#pragma once

#include <cmath>

namespace obslab {

namespace detail {

inline long wrap_index(long i, long n) noexcept {
  const long m = i % n;
  return m < 0 ? m + n : m;
}

// Largest contiguous run [lo, hi] of integers i with (u(i) - c)^2 <= rem2,
// u(i) = (i - n/2) h, seeded from the floating estimate and then settled
// against the exact predicate.
inline bool axis_span(double c, double rem2, double h, long n, long& lo, long& hi) {
  if (rem2 < 0.0) return false;
  const double half = 0.5 * static_cast<double>(n);
  auto inside = [&](long i) {
    const double u = (static_cast<double>(i) - half) * h - c;
    return u * u <= rem2;
  };
  const double w = std::sqrt(rem2);
  lo = static_cast<long>(std::ceil((c - w) / h + half));
  hi = static_cast<long>(std::floor((c + w) / h + half));
  while (inside(lo - 1)) --lo;
  while (lo <= hi && !inside(lo)) ++lo;
  while (inside(hi + 1)) ++hi;
  while (hi >= lo && !inside(hi)) --hi;
  return lo <= hi;
}

}  // namespace detail

template <class Visit>
void for_each_ball_row(const GridSpec& grid, const Point& center, double radius, Visit&& visit) {
  const int d = grid.dim();
  const long n = grid.n();
  const double h = grid.spacing();
  const double half = 0.5 * static_cast<double>(n);
  const double r2 = radius * radius;
  BallRow row;
  auto dy2 = [&](long i, double c) {
    const double u = (static_cast<double>(i) - half) * h - c;
    return u * u;
  };
  if (d == 1) {
    if (detail::axis_span(center[0], r2, h, n, row.lo, row.hi)) visit(row);
    return;
  }
  long lo0 = 0, hi0 = -1;
  if (!detail::axis_span(center[0], r2, h, n, lo0, hi0)) return;
  for (long i = lo0; i <= hi0; ++i) {
    const double rem1 = r2 - dy2(i, center[0]);
    row.lead[0] = static_cast<int>(detail::wrap_index(i, n));
    if (d == 2) {
      if (detail::axis_span(center[1], rem1, h, n, row.lo, row.hi)) visit(row);
      continue;
    }
    long lo1 = 0, hi1 = -1;
    if (!detail::axis_span(center[1], rem1, h, n, lo1, hi1)) continue;
    for (long j = lo1; j <= hi1; ++j) {
      const double rem2 = rem1 - dy2(j, center[1]);
      row.lead[1] = static_cast<int>(detail::wrap_index(j, n));
      if (detail::axis_span(center[2], rem2, h, n, row.lo, row.hi)) visit(row);
    }
  }
}

}  // namespace obslab
