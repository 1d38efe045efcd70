#include "obslab/geometry/annulus.hpp"

#include <cmath>
#include <string>

#include "obslab/core/dimension.hpp"
#include "obslab/core/errors.hpp"
#include "obslab/core/fourier.hpp"
#include "obslab/geometry/balls.hpp"

namespace obslab {

namespace {

void require_resolved(const GridSpec& grid, const Annulus& a) {
  if (!(a.outer() < grid.nyquist()))
    throw PreconditionError("annulus outer radius " + std::to_string(a.outer()) + " is not below Nyquist " +
                                std::to_string(grid.nyquist()),
                            "annulus resolved: sqrt(lambda) + lambda^(-beta/2) < n/(2L)");
}

// Lattice indices i in [first, last] (one row, coordinates (i - n/2) h
// increasing in i) whose point lies in the annulus. With the leading
// coordinates fixed the set is one interval on each side of 0; found from the
// closed form and settled against the exact predicate.
struct RowIntervals {
  long pos_lo = 1, pos_hi = 0;  // indices >= n/2
  long neg_lo = 1, neg_hi = 0;  // indices < n/2
};

RowIntervals annulus_row(const Annulus& a, double lead2, double h, long n) {
  RowIntervals out;
  const double half = 0.5 * static_cast<double>(n);
  auto inside = [&](long i) {
    const double x = (static_cast<double>(i) - half) * h;
    return a.contains(std::sqrt(x * x + lead2));
  };
  const double outer2 = a.outer() * a.outer() - lead2;
  if (outer2 < -4.0 * h * h) return out;
  const double inner = a.radius - a.half_width;
  const double inner2 = inner > 0.0 ? inner * inner - lead2 : -1.0;
  const double xa = inner2 > 0.0 ? std::sqrt(inner2) : 0.0;
  const double xb = std::sqrt(std::max(outer2, 0.0));
  const long mid = n / 2;
  long lo = std::max(mid, static_cast<long>(std::ceil(xa / h + half)));
  long hi = std::min(n - 1, static_cast<long>(std::floor(xb / h + half)));
  while (lo - 1 >= mid && inside(lo - 1)) --lo;
  while (lo <= hi && !inside(lo)) ++lo;
  while (hi + 1 <= n - 1 && inside(hi + 1)) ++hi;
  while (hi >= lo && !inside(hi)) --hi;
  if (lo > hi) {
    // The closed form can miss a lone grazing point by rounding.
    for (long i = std::max(mid, lo - 2); i <= std::min(n - 1, lo + 2); ++i)
      if (inside(i)) {
        lo = hi = i;
        while (hi + 1 <= n - 1 && inside(hi + 1)) ++hi;
        break;
      }
  }
  if (lo > hi) return out;
  out.pos_lo = lo;
  out.pos_hi = hi;
  // Mirror: index n - i carries coordinate -(i - n/2) h. Index 0 (the unpaired
  // Nyquist point) is never inside a resolved annulus.
  const long plo = std::max(lo, mid + 1);
  if (plo <= hi) {
    out.neg_lo = n - hi;
    out.neg_hi = n - plo;
  }
  return out;
}

long overlap(long a, long b, long c, long d) {
  const long lo = std::max(a, c);
  const long hi = std::min(b, d);
  return hi >= lo ? hi - lo + 1 : 0;
}

// Annulus cells among the wrapped columns of unwrapped span [lo, hi].
std::size_t count_span(const RowIntervals& r, long lo, long hi, long n) {
  std::size_t total = 0;
  while (lo <= hi) {
    const long w = detail::wrap_index(lo, n);
    const long run = std::min(hi - lo, n - 1 - w);
    total += static_cast<std::size_t>(overlap(w, w + run, r.pos_lo, r.pos_hi));
    total += static_cast<std::size_t>(overlap(w, w + run, r.neg_lo, r.neg_hi));
    lo += run + 1;
  }
  return total;
}

}  // namespace

Annulus Annulus::make(double lambda, double beta, double s) {
  if (!(lambda > 0.0) || !(beta > 0.0) || !(s >= 1.0))
    throw PreconditionError("annulus needs lambda > 0, beta > 0, s >= 1");
  const double mu = s == 1.0 ? lambda : std::pow(lambda, 1.0 / s);
  return Annulus{std::sqrt(mu), std::pow(mu, -0.5 * beta)};
}

Mask annulus_mask(const GridSpec& grid, double lambda, double beta, double s) {
  const Annulus a = Annulus::make(lambda, beta, s);
  require_resolved(grid, a);
  const GridSpec f = grid.as_frequency();
  const auto& xi2 = squared_frequencies(f);
  std::vector<std::uint8_t> bits(f.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = a.contains(std::sqrt(xi2[i])) ? 1 : 0;
  return Mask(f, std::move(bits));
}

double thinness_scale(int d, double beta, double epsilon) {
  const auto& c = dimension_constants(d);
  return std::pow(3.0, 1.0 + beta) * c.cd_prime / (epsilon * c.omega_d);
}

double thinness_threshold(int d, double beta, double epsilon) {
  const double L = thinness_scale(d, beta, epsilon);
  return (2.0 * L + 1.0) * (2.0 * L + 1.0);
}

ThinnessReport thinness_check(const GridSpec& grid, double lambda, double beta, double epsilon,
                              std::span<const Point> centers, bool force) {
  if (!(epsilon > 0.0)) throw PreconditionError("thinness epsilon must be positive");
  const GridSpec f = grid.as_frequency();
  const int d = f.dim();
  ThinnessReport rep;
  rep.lambda = lambda;
  rep.beta = beta;
  rep.epsilon = epsilon;
  rep.L = thinness_scale(d, beta, epsilon);
  rep.lambda0 = thinness_threshold(d, beta, epsilon);
  rep.forced = force && lambda < rep.lambda0;
  if (lambda < rep.lambda0 && !force)
    throw PreconditionError("lambda = " + std::to_string(lambda) + " is below the thinness threshold " +
                                std::to_string(rep.lambda0),
                            "lambda >= lambda_0 = (2L+1)^2 of the annulus thinness lemma");
  const Annulus a = Annulus::make(lambda, beta);
  require_resolved(f, a);
  const Density rho = Density::scaled_power(rep.L, beta);
  const long n = f.n();
  const double h = f.spacing();
  const double half = 0.5 * static_cast<double>(n);

  rep.centers.assign(centers.begin(), centers.end());
  for (std::size_t k = 0; k < centers.size(); ++k) {
    const double r = rho.at(centers[k], d);
    require_ball_fits(f, r);
    BallTally t;
    for_each_ball_row(f, centers[k], r, [&](const BallRow& row) {
      double lead2 = 0.0;
      for (int ax = 0; ax + 1 < d; ++ax) {
        const double y = (row.lead[ax] - half) * h;
        lead2 += y * y;
      }
      t.total += static_cast<std::size_t>(row.hi - row.lo + 1);
      t.inside += count_span(annulus_row(a, lead2, h, n), row.lo, row.hi, n);
    });
    if (t.total == 0)
      throw PreconditionError("ball of radius " + std::to_string(r) + " contains no lattice point; refine the lattice");
    rep.ratios.push_back(t.ratio());
    rep.ball_cells.push_back(t.total);
    if (t.ratio() > rep.max_ratio || k == 0) {
      rep.max_ratio = t.ratio();
      rep.argmax = k;
    }
  }
  rep.verdict = rep.max_ratio <= epsilon;
  return rep;
}

}  // namespace obslab
