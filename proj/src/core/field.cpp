#include "obslab/core/field.hpp"

#include <cmath>
#include <string>

#include "obslab/core/errors.hpp"
#include "obslab/simd/kernels.hpp"

namespace obslab {

Field::Field(const GridSpec& grid) : grid_(grid), samples_(grid.size(), cplx{}) {}

Field::Field(const GridSpec& grid, std::vector<cplx> samples) : grid_(grid), samples_(std::move(samples)) {
  if (samples_.size() != grid_.size())
    throw PreconditionError("field has " + std::to_string(samples_.size()) + " samples, grid needs " +
                            std::to_string(grid_.size()));
}

Field Field::from_function(const GridSpec& grid, const std::function<cplx(const Point&)>& fn) {
  Field f(grid);
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = fn(grid.point(i));
  return f;
}

double Field::norm_sq() const noexcept {
  return grid_.cell_volume() * simd::kernels().norm_sq(samples_.data(), samples_.size());
}

Field& Field::operator+=(const Field& other) {
  require_same_grid(grid_, other.grid_, "field addition");
  simd::kernels().axpy(cplx{1.0, 0.0}, other.samples_.data(), samples_.data(), samples_.size());
  return *this;
}

Field& Field::operator-=(const Field& other) {
  require_same_grid(grid_, other.grid_, "field subtraction");
  simd::kernels().axpy(cplx{-1.0, 0.0}, other.samples_.data(), samples_.data(), samples_.size());
  return *this;
}

Field& Field::operator*=(cplx s) noexcept {
  for (auto& v : samples_) v *= s;
  return *this;
}

cplx inner(const Field& a, const Field& b) {
  require_same_grid(a.grid(), b.grid(), "inner product");
  return a.grid().cell_volume() * simd::kernels().dot(a.samples().data(), b.samples().data(), a.size());
}

double relative_distance(const Field& a, const Field& b) {
  Field diff = a;
  diff -= b;
  return std::sqrt(diff.norm_sq() / b.norm_sq());
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
  if (!(a == b)) throw PreconditionError(std::string("grid mismatch in ") + what);
}

}  // namespace obslab
