#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "obslab/core/field.hpp"
#include "obslab/core/mask.hpp"

namespace obslab {

// Symbols under Delta <-> -4 pi^2 |xi|^2.
namespace kind {
struct Schrodinger {  // e^{itDelta}
  double t;
};
struct Fractional {  // e^{-it(-Delta)^s}, s > 1/2
  double t;
  double s;
};
struct Heat {  // e^{tDelta}, t >= 0
  double t;
};
struct ResolventDefect {  // -Delta - lambda
  double lambda;
};
struct LaplacianShift {  // -Delta + lambda
  double lambda;
};
struct ProjectorBall {  // 1_{|xi| <= radius}
  double radius;
};
struct ProjectorMask {  // 1_Omega, Omega on the frequency lattice
  Mask mask;
};
}  // namespace kind

using MultiplierKind = std::variant<kind::Schrodinger, kind::Fractional, kind::Heat, kind::ResolventDefect,
                                    kind::LaplacianShift, kind::ProjectorBall, kind::ProjectorMask>;

std::string describe(const MultiplierKind& k);

class Multiplier {
 public:
  Multiplier(const GridSpec& grid, MultiplierKind kind, std::vector<cplx> symbol)
      : grid_(grid), kind_(std::move(kind)), symbol_(std::move(symbol)) {}

  // The space grid the multiplier acts on.
  const GridSpec& grid() const noexcept { return grid_; }
  const MultiplierKind& kind() const noexcept { return kind_; }
  std::span<const cplx> symbol() const noexcept { return symbol_; }

 private:
  GridSpec grid_;
  MultiplierKind kind_;
  std::vector<cplx> symbol_;
};

Multiplier make_multiplier(const GridSpec& grid, MultiplierKind kind);

Field apply_multiplier(const Field& f, const Multiplier& m);

// Same as apply_multiplier on weighted samples, in place.
void apply_symbol(std::span<cplx> weighted, const Multiplier& m);

}  // namespace obslab
