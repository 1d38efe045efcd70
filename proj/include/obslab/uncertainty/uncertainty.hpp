#pragma once

#include "obslab/core/mask.hpp"
#include "obslab/geometry/density.hpp"
#include "obslab/uncertainty/report.hpp"

namespace obslab {

// (O, Omega) with O on a space grid, Omega on its frequency lattice, and the
// band limit of the test space.
struct UPInstance {
  Mask O;
  Mask Omega;
  double band;
};

// ||f||^2 / (||f||^2_O + ||f^||^2_Omega); +inf when the denominator vanishes.
double up_ratio(const Field& f, const Mask& O, const Mask& Omega);

// f -> P(1_O f) on the band subspace.
linalg::LinearMap restriction_operator(const BandSubspace& sub, const Mask& O);
// f -> P(1_O f + F^-1 1_Omega F f) on the band subspace.
linalg::LinearMap up_operator(const BandSubspace& sub, const Mask& O, const Mask& Omega);

// 1 / lambda_min of up_operator.
ConstantReport up_constant(const UPInstance& inst, const SolveOptions& opt = {});

// 1 / lambda_min of P 1_O P on {supp f^ in ball(lambda)}; parameters carry
// c_spec = log(constant) / (1 + lambda).
ConstantReport spectral_constant(const Mask& O, double lambda, const SolveOptions& opt = {});

// Unit-norm N e^{2 i pi xi0.x} e^{-|x - x0|^2 / (2 sigma^2)}. Rejects packets
// losing more than 1e-10 of their mass past the box or past Nyquist.
Field sharpness_packet(const GridSpec& grid, const Point& x0, const Point& xi0, double sigma);

// Self-dual Gaussian comb in holes. With c = fraction and holes
// B(k, c rho(k)), |k| <= K, in space and identically on the frequency side,
//   f(x) = sum_k e^{-pi k^2 / X^2} e^{-pi X^2 (x - k)^2}
// has f^ of the same shape up to a smooth factor, so both f and f^ sit almost
// entirely in the holes once X is large against 1 / (c rho(X)).
struct SharpnessCase {
  Mask O;
  Mask Omega;
  Field f;
  double width;  // X
  int K;
  double fraction;
};

SharpnessCase sharpness_comb(const GridSpec& grid, double width, double fraction, const Density& rho);

}  // namespace obslab
