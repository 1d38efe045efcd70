#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "obslab/core/field.hpp"

namespace obslab {

// Band-limited fields {f : supp f^ in closed ball(0, band)} on a space grid.
//
// A field is represented by its coefficients c_m = f^(xi_m) dxi^{d/2} at the
// lattice points inside the ball, so the Euclidean norm of c equals the L2
// norm of f and every operator restricted to the subspace is a plain
// Hermitian matrix in these coordinates.
class BandSubspace {
 public:
  BandSubspace(const GridSpec& grid, double band);

  const GridSpec& grid() const noexcept { return grid_; }
  double band() const noexcept { return band_; }
  std::size_t dim() const noexcept { return index_.size(); }

  // Flat lattice index of each coefficient.
  std::span<const std::size_t> lattice_indices() const noexcept { return index_; }
  // |xi|^2 of each coefficient.
  std::span<const double> squared_frequencies() const noexcept { return xi2_; }

  // coeffs -> weighted space samples (f dx^{d/2}), full grid.
  void synthesize(std::span<const cplx> coeffs, std::span<cplx> weighted) const;
  // weighted space samples -> coeffs, i.e. the orthogonal projection.
  // `weighted` is used as scratch and overwritten.
  void analyze(std::span<cplx> weighted, std::span<cplx> coeffs) const;

  Field to_field(std::span<const cplx> coeffs) const;
  std::vector<cplx> project(const Field& f) const;

 private:
  GridSpec grid_;
  double band_;
  double root_cell_;  // dx^{d/2}
  std::vector<std::size_t> index_;
  std::vector<double> xi2_;
};

}  // namespace obslab
