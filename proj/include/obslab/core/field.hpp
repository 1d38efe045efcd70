#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "obslab/core/grid.hpp"

namespace obslab {

using cplx = std::complex<double>;

// Complex samples on a GridSpec. All norms and inner products carry the
// cell-volume weight, so they approximate Lebesgue integrals.
class Field {
 public:
  explicit Field(const GridSpec& grid);
  Field(const GridSpec& grid, std::vector<cplx> samples);

  static Field from_function(const GridSpec& grid, const std::function<cplx(const Point&)>& fn);

  const GridSpec& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return samples_.size(); }

  std::span<cplx> samples() noexcept { return samples_; }
  std::span<const cplx> samples() const noexcept { return samples_; }

  cplx& operator[](std::size_t i) noexcept { return samples_[i]; }
  const cplx& operator[](std::size_t i) const noexcept { return samples_[i]; }

  // cell_volume * sum |f|^2
  double norm_sq() const noexcept;

  Field& operator+=(const Field& other);
  Field& operator-=(const Field& other);
  Field& operator*=(cplx s) noexcept;

 private:
  GridSpec grid_;
  std::vector<cplx> samples_;
};

// cell_volume * sum conj(a) b
cplx inner(const Field& a, const Field& b);

// ||a - b|| / ||b||
double relative_distance(const Field& a, const Field& b);

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

}  // namespace obslab
