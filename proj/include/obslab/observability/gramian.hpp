#pragma once

#include <variant>

#include "obslab/core/mask.hpp"
#include "obslab/uncertainty/report.hpp"

namespace obslab {

namespace propagator {
struct Schrodinger {};
struct Fractional {
  double s;
};
struct Heat {};
// e^{it(Delta - V)} by Strang splitting, n_steps per quadrature interval.
struct Potential {
  Field V;
  int n_steps = 8;
};
}  // namespace propagator

using PropagatorKind =
    std::variant<propagator::Schrodinger, propagator::Fractional, propagator::Heat, propagator::Potential>;

// (T / n_t) sum_j U(-t_j) 1_O U(t_j),  t_j = (j + 1/2) T / n_t, on the band
// subspace. For the heat kind the sandwich is e^{t_j Delta} 1_O e^{t_j Delta}.
struct GramianSpec {
  Mask O;
  double T = 1.0;
  int n_t = 64;
  PropagatorKind kind = propagator::Schrodinger{};
  double band = 1.0;
};

void validate(const GramianSpec& spec);

linalg::LinearMap gramian_operator(const BandSubspace& sub, const GramianSpec& spec);

// P G P f, with f projected onto the band first.
Field gramian_apply(const Field& f, const GramianSpec& spec);

ConstantReport obs_constant(const GramianSpec& spec, const SolveOptions& opt = {});

// 1 / lambda_min of U(-T) 1_O1 U(T) + U(-S) 1_O2 U(S), Schrodinger flow.
ConstantReport two_time_constant(const Mask& O1, const Mask& O2, double T, double S, double band,
                                 const SolveOptions& opt = {});

ConstantReport heat_obs_constant(const Mask& O, double T, int n_t, double band, const SolveOptions& opt = {});

}  // namespace obslab
