#pragma once

#include <memory>
#include <string>
#include <variant>

#include "obslab/core/mask.hpp"
#include "obslab/geometry/density.hpp"

namespace obslab {

struct SetSpec;
using SetPtr = std::shared_ptr<const SetSpec>;

namespace shape {
struct Full {};
struct Empty {};
// {x : frac((x_axis - offset) / period) < fraction}
struct PeriodicSlab {
  double period;
  double fraction;
  int axis = 0;
  double offset = 0.0;
};
// d = 2: {(x, y) : |xy| > C}
struct HyperbolaComplement {
  double C;
};
// R^d minus the balls B(2^k e_1, 2^{-k/2}), k >= k_min, 2^k inside the box
struct BallLatticeComplement {
  int k_min = 1;
};
// Closed ball B(center, radius)
struct Ball {
  Point center;
  double radius;
};
// R^d minus the balls B(spacing * k, fraction * rho(spacing * k)),
// k in Z^d with max |k_i| <= K
struct DensityHoles {
  double spacing;
  int K;
  double fraction;
  Density density;
};
struct Union {
  SetPtr a;
  SetPtr b;
};
struct Intersection {
  SetPtr a;
  SetPtr b;
};
struct Complement {
  SetPtr a;
};
// r * A = {x : x / r in A}
struct Dilation {
  double r;
  SetPtr a;
};
}  // namespace shape

struct SetSpec {
  std::variant<shape::Full, shape::Empty, shape::PeriodicSlab, shape::HyperbolaComplement,
               shape::BallLatticeComplement, shape::Ball, shape::DensityHoles, shape::Union, shape::Intersection,
               shape::Complement, shape::Dilation>
      node;
};

template <class T>
SetPtr make_spec(T node) {
  return std::make_shared<const SetSpec>(SetSpec{std::move(node)});
}

// Point membership in R^d (d taken from the caller's grid).
bool contains(const SetSpec& spec, const Point& x, int d);

// Cell-centre membership on a space grid or a frequency lattice.
Mask make_set(const GridSpec& grid, const SetSpec& spec);

std::string describe(const SetSpec& spec);

}  // namespace obslab
