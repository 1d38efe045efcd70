#pragma once

// Continuous Fourier transform f^(xi) = int f(x) e^{-2 i pi x.xi} dx, sampled.
//
// On a grid with n/2 even the centred DFT reduces to a checkerboard sign on
// both sides of a plain FFT:
//
//   f^_k = dx^d * s_k * DFT(s_j f_j)_k,      s_j = (-1)^(j_1 + ... + j_d)
//
// In weighted coordinates (f dx^{d/2} on the space side, f^ dxi^{d/2} on the
// frequency side) the map is unitary, which is the form every operator in the
// library works in.

#include <span>
#include <vector>

#include "obslab/core/field.hpp"

namespace obslab {

// Space grid -> dual frequency grid. Plancherel holds to rounding.
Field fourier_forward(const Field& f);
// Frequency grid -> dual space grid.
Field fourier_inverse(const Field& g);

// In-place unitary transforms of weighted samples, n^d entries.
void unitary_forward(int d, int n, std::span<cplx> data);
void unitary_inverse(int d, int n, std::span<cplx> data);

// |xi|^2 for every lattice point of grid's frequency lattice, row-major.
// Shared and immutable; computed once per (d, n, box_len).
const std::vector<double>& squared_frequencies(const GridSpec& grid);

}  // namespace obslab
