#include "obslab/core/subspace.hpp"

#include <cmath>
#include <string>

#include "obslab/core/errors.hpp"
#include "obslab/core/fourier.hpp"

namespace obslab {

BandSubspace::BandSubspace(const GridSpec& grid, double band)
    : grid_(grid.as_space()), band_(band), root_cell_(std::sqrt(grid_.cell_volume())) {
  if (!(band > 0.0) || band >= grid_.nyquist())
    throw PreconditionError("band limit " + std::to_string(band) + " must lie in (0, Nyquist = " +
                                std::to_string(grid_.nyquist()) + ")",
                            "band < n/(2L)");
  const auto& xi2 = obslab::squared_frequencies(grid_);
  const double b2 = band * band;
  for (std::size_t i = 0; i < xi2.size(); ++i) {
    if (xi2[i] <= b2) {
      index_.push_back(i);
      xi2_.push_back(xi2[i]);
    }
  }
}

void BandSubspace::synthesize(std::span<const cplx> coeffs, std::span<cplx> weighted) const {
  if (coeffs.size() != dim() || weighted.size() != grid_.size())
    throw PreconditionError("subspace synthesis buffer size mismatch");
  std::fill(weighted.begin(), weighted.end(), cplx{});
  for (std::size_t m = 0; m < index_.size(); ++m) weighted[index_[m]] = coeffs[m];
  unitary_inverse(grid_.dim(), grid_.n(), weighted);
}

void BandSubspace::analyze(std::span<cplx> weighted, std::span<cplx> coeffs) const {
  if (coeffs.size() != dim() || weighted.size() != grid_.size())
    throw PreconditionError("subspace analysis buffer size mismatch");
  unitary_forward(grid_.dim(), grid_.n(), weighted);
  for (std::size_t m = 0; m < index_.size(); ++m) coeffs[m] = weighted[index_[m]];
}

Field BandSubspace::to_field(std::span<const cplx> coeffs) const {
  Field f(grid_);
  synthesize(coeffs, f.samples());
  f *= 1.0 / root_cell_;
  return f;
}

std::vector<cplx> BandSubspace::project(const Field& f) const {
  require_same_grid(f.grid(), grid_, "subspace projection");
  std::vector<cplx> w(f.samples().begin(), f.samples().end());
  for (auto& v : w) v *= root_cell_;
  std::vector<cplx> c(dim());
  analyze(w, c);
  return c;
}

}  // namespace obslab
