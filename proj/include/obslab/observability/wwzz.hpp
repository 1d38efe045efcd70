#pragma once

#include "obslab/geometry/sets.hpp"
#include "obslab/observability/gramian.hpp"

namespace obslab {

// Uncertainty principle for (A, B) against the two-time estimate
//   ||f||^2 <= C (||f||^2_A + ||e^{iT Delta} f||^2_{4 pi T B}).
// Under f^(xi) = int f e^{-2 i pi x xi} the free flow carries frequency xi to
// position 4 pi T xi, so the dilation is 4 pi T rather than 2T.
struct WwzzReport {
  ConstantReport up;   // C1
  ConstantReport two;  // C2
  double gap = 0.0;    // |C1 - C2| / max(C1, C2)
  double dilation = 0.0;
};

// A on the space grid; B is built on the frequency lattice and, dilated, on
// the space grid. Requires 4 pi T band < box_len / 2 so the evolved band does
// not wrap around the box.
WwzzReport wwzz_check(const Mask& A, const SetSpec& B, double T, double band, const SolveOptions& opt = {});

}  // namespace obslab
