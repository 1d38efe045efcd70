#pragma once

#include <span>
#include <vector>

#include "obslab/core/field.hpp"

namespace obslab {

// Strang splitting for e^{ih(Delta - V)}: half potential phase, exact kinetic
// step, half potential phase. Consecutive half phases are fused, so k steps
// cost k kinetic multiplies and k + 1 phase multiplies.
//
// The stepper for -h is the exact inverse (and adjoint) of the stepper for h.
class StrangStepper {
 public:
  // V must be real-valued on `grid`.
  StrangStepper(const GridSpec& grid, std::span<const cplx> potential, double h);

  const GridSpec& grid() const noexcept { return grid_; }
  double step() const noexcept { return h_; }

  // Apply `steps` Strang steps in place. Works on raw or weighted samples.
  void advance(std::span<cplx> data, int steps) const;

 private:
  GridSpec grid_;
  double h_;
  std::vector<cplx> half_phase_;
  std::vector<cplx> full_phase_;
  std::vector<cplx> kinetic_;
};

// Rejects potentials with a nonzero imaginary part.
void require_real_potential(const Field& V);

Field evolve_potential(const Field& f, double t, const Field& V, int n_steps);

}  // namespace obslab
