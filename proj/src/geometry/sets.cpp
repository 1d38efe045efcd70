#include "obslab/geometry/sets.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "obslab/core/errors.hpp"

namespace obslab {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double dist_sq(const Point& a, const Point& b, int d) {
  double s = 0.0;
  for (int i = 0; i < d; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

// Parameter checks that do not depend on the point; run once per make_set.
void validate(const SetSpec& spec, const GridSpec& grid) {
  const int d = grid.dim();
  std::visit(overloaded{
                 [](const shape::Full&) {},
                 [](const shape::Empty&) {},
                 [&](const shape::PeriodicSlab& s) {
                   if (!(s.period > 0.0)) throw PreconditionError("slab period must be positive");
                   if (!(s.fraction >= 0.0 && s.fraction <= 1.0))
                     throw PreconditionError("slab fraction must lie in [0, 1]");
                   if (s.axis < 0 || s.axis >= d) throw PreconditionError("slab axis outside the grid dimension");
                 },
                 [&](const shape::HyperbolaComplement& h) {
                   if (d != 2) throw PreconditionError("hyperbola_complement is defined for d = 2 only");
                   if (!(h.C >= 0.0)) throw PreconditionError("hyperbola constant must be nonnegative");
                 },
                 [](const shape::BallLatticeComplement&) {},
                 [](const shape::Ball& b) {
                   if (!(b.radius >= 0.0)) throw PreconditionError("ball radius must be nonnegative");
                 },
                 [](const shape::DensityHoles& h) {
                   if (!(h.spacing > 0.0) || h.K < 0 || !(h.fraction > 0.0))
                     throw PreconditionError("density_holes needs spacing > 0, K >= 0, fraction > 0");
                 },
                 [&](const shape::Union& u) {
                   validate(*u.a, grid);
                   validate(*u.b, grid);
                 },
                 [&](const shape::Intersection& u) {
                   validate(*u.a, grid);
                   validate(*u.b, grid);
                 },
                 [&](const shape::Complement& c) { validate(*c.a, grid); },
                 [&](const shape::Dilation& r) {
                   if (!(r.r > 0.0)) throw PreconditionError("dilation factor must be positive");
                   validate(*r.a, grid);
                 },
             },
             spec.node);
}

bool in_density_holes(const shape::DensityHoles& h, const Point& x, int d) {
  const int K = h.K;
  Point c{0.0, 0.0, 0.0};
  for (int i = -K; i <= K; ++i) {
    c[0] = i * h.spacing;
    for (int j = (d > 1 ? -K : 0); j <= (d > 1 ? K : 0); ++j) {
      if (d > 1) c[1] = j * h.spacing;
      for (int k = (d > 2 ? -K : 0); k <= (d > 2 ? K : 0); ++k) {
        if (d > 2) c[2] = k * h.spacing;
        const double r = h.fraction * h.density.at(c, d);
        if (dist_sq(x, c, d) <= r * r) return true;
      }
    }
  }
  return false;
}

bool contains_impl(const SetSpec& spec, const Point& x, int d, double box_half) {
  return std::visit(
      overloaded{
          [](const shape::Full&) { return true; },
          [](const shape::Empty&) { return false; },
          [&](const shape::PeriodicSlab& s) {
            const double u = (x[s.axis] - s.offset) / s.period;
            return u - std::floor(u) < s.fraction;
          },
          [&](const shape::HyperbolaComplement& h) { return std::fabs(x[0] * x[1]) > h.C; },
          [&](const shape::BallLatticeComplement& b) {
            for (int k = b.k_min;; ++k) {
              const double c = std::ldexp(1.0, k);
              if (c >= box_half) break;
              const double r = 1.0 / std::sqrt(c);
              Point xk{c, 0.0, 0.0};
              if (dist_sq(x, xk, d) <= r * r) return false;
            }
            return true;
          },
          [&](const shape::Ball& b) { return dist_sq(x, b.center, d) <= b.radius * b.radius; },
          [&](const shape::DensityHoles& h) { return !in_density_holes(h, x, d); },
          [&](const shape::Union& u) {
            return contains_impl(*u.a, x, d, box_half) || contains_impl(*u.b, x, d, box_half);
          },
          [&](const shape::Intersection& u) {
            return contains_impl(*u.a, x, d, box_half) && contains_impl(*u.b, x, d, box_half);
          },
          [&](const shape::Complement& c) { return !contains_impl(*c.a, x, d, box_half); },
          [&](const shape::Dilation& r) {
            Point y{0.0, 0.0, 0.0};
            for (int a = 0; a < d; ++a) y[a] = x[a] / r.r;
            return contains_impl(*r.a, y, d, box_half / r.r);
          },
      },
      spec.node);
}

}  // namespace

bool contains(const SetSpec& spec, const Point& x, int d) {
  return contains_impl(spec, x, d, std::numeric_limits<double>::infinity());
}

Mask make_set(const GridSpec& grid, const SetSpec& spec) {
  validate(spec, grid);
  const int d = grid.dim();
  const double half = 0.5 * grid.extent();
  std::vector<std::uint8_t> bits(grid.size());
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = contains_impl(spec, grid.point(i), d, half) ? 1 : 0;
  return Mask(grid, std::move(bits));
}

std::string describe(const SetSpec& spec) {
  std::ostringstream os;
  std::visit(overloaded{
                 [&](const shape::Full&) { os << "full"; },
                 [&](const shape::Empty&) { os << "empty"; },
                 [&](const shape::PeriodicSlab& s) {
                   os << "periodic_slab(p=" << s.period << ",phi=" << s.fraction << ",axis=" << s.axis << ")";
                 },
                 [&](const shape::HyperbolaComplement& h) { os << "hyperbola_complement(C=" << h.C << ")"; },
                 [&](const shape::BallLatticeComplement& b) { os << "ball_lattice_complement(k_min=" << b.k_min << ")"; },
                 [&](const shape::Ball& b) { os << "ball(r=" << b.radius << ")"; },
                 [&](const shape::DensityHoles& h) {
                   os << "density_holes(spacing=" << h.spacing << ",K=" << h.K << ",c=" << h.fraction
                      << ",rho=" << h.density.describe() << ")";
                 },
                 [&](const shape::Union& u) { os << "(" << describe(*u.a) << " | " << describe(*u.b) << ")"; },
                 [&](const shape::Intersection& u) { os << "(" << describe(*u.a) << " & " << describe(*u.b) << ")"; },
                 [&](const shape::Complement& c) { os << "~" << describe(*c.a); },
                 [&](const shape::Dilation& r) { os << r.r << "*" << describe(*r.a); },
             },
             spec.node);
  return os.str();
}

}  // namespace obslab
