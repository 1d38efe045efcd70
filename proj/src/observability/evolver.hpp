#pragma once

#include <memory>
#include <optional>
#include <span>

#include "obslab/core/multiplier.hpp"
#include "obslab/core/propagate.hpp"
#include "obslab/observability/gramian.hpp"

namespace obslab::detail {

// A fixed time step of one propagator on full-grid weighted buffers, with its
// adjoint. For the unitary kinds the adjoint is the backward step; for heat
// it is the step itself.
class TimeStep {
 public:
  TimeStep(const GridSpec& grid, const PropagatorKind& kind, double t);

  void forward(std::span<cplx> buf) const;
  void adjoint(std::span<cplx> buf) const;

 private:
  std::optional<Multiplier> fwd_;
  std::optional<Multiplier> bwd_;
  std::optional<StrangStepper> sfwd_;
  std::optional<StrangStepper> sbwd_;
  int steps_ = 0;
};

}  // namespace obslab::detail
