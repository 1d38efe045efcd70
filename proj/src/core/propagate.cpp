#include "obslab/core/propagate.hpp"

#include <cmath>
#include <numbers>

#include "obslab/core/errors.hpp"
#include "obslab/core/fourier.hpp"
#include "obslab/simd/kernels.hpp"

namespace obslab {

StrangStepper::StrangStepper(const GridSpec& grid, std::span<const cplx> potential, double h)
    : grid_(grid.as_space()), h_(h) {
  if (potential.size() != grid_.size()) throw PreconditionError("potential does not match the grid");
  const auto& xi2 = squared_frequencies(grid_);
  constexpr double four_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;
  half_phase_.resize(grid_.size());
  full_phase_.resize(grid_.size());
  kinetic_.resize(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    const double v = potential[i].real();
    half_phase_[i] = std::polar(1.0, -0.5 * h * v);
    full_phase_[i] = std::polar(1.0, -h * v);
    kinetic_[i] = std::polar(1.0, -h * four_pi_sq * xi2[i]);
  }
}

void StrangStepper::advance(std::span<cplx> data, int steps) const {
  if (steps < 1) return;
  if (data.size() != grid_.size()) throw PreconditionError("buffer does not match the stepper grid");
  const auto& k = simd::kernels();
  const int d = grid_.dim();
  const int n = grid_.n();
  k.scale_complex(data.data(), half_phase_.data(), data.size());
  for (int s = 0; s < steps; ++s) {
    unitary_forward(d, n, data);
    k.scale_complex(data.data(), kinetic_.data(), data.size());
    unitary_inverse(d, n, data);
    const auto& phase = (s + 1 < steps) ? full_phase_ : half_phase_;
    k.scale_complex(data.data(), phase.data(), data.size());
  }
}

void require_real_potential(const Field& V) {
  double vmax = 0.0;
  double imax = 0.0;
  for (const auto& v : V.samples()) {
    vmax = std::max(vmax, std::abs(v));
    imax = std::max(imax, std::abs(v.imag()));
  }
  if (imax > 1e-14 * std::max(vmax, 1.0)) throw PreconditionError("potential must be real-valued");
  for (const auto& v : V.samples())
    if (!std::isfinite(v.real())) throw PreconditionError("potential must be bounded");
}

Field evolve_potential(const Field& f, double t, const Field& V, int n_steps) {
  if (n_steps < 1) throw PreconditionError("n_steps must be at least 1");
  require_same_grid(f.grid(), V.grid(), "evolve_potential");
  require_real_potential(V);
  StrangStepper stepper(f.grid(), V.samples(), t / n_steps);
  Field out = f;
  stepper.advance(out.samples(), n_steps);
  return out;
}

}  // namespace obslab
