#include "obslab/core/grid.hpp"

#include <cmath>
#include <string>

#include "obslab/core/errors.hpp"

namespace obslab {

GridSpec::GridSpec(int d, int n, double box_len, Domain domain) noexcept
    : d_(d), n_(n), box_len_(box_len), domain_(domain), size_(1) {
  for (int a = 0; a < d_; ++a) size_ *= static_cast<std::size_t>(n_);
}

GridSpec GridSpec::make(int d, int n, double box_len) {
  if (d < 1 || d > 3) throw PreconditionError("grid dimension must be 1, 2 or 3, got " + std::to_string(d));
  if (n < 8 || (n & (n - 1)) != 0)
    throw PreconditionError("samples per axis must be a power of two >= 8, got " + std::to_string(n));
  if (!(box_len > 0.0) || !std::isfinite(box_len))
    throw PreconditionError("box length must be positive and finite");
  return GridSpec(d, n, box_len, Domain::space);
}

double GridSpec::spacing() const noexcept {
  return domain_ == Domain::space ? box_len_ / n_ : 1.0 / box_len_;
}

double GridSpec::extent() const noexcept { return domain_ == Domain::space ? box_len_ : n_ / box_len_; }

double GridSpec::cell_volume() const noexcept { return std::pow(spacing(), d_); }

GridSpec GridSpec::dual() const noexcept {
  return GridSpec(d_, n_, box_len_, domain_ == Domain::space ? Domain::frequency : Domain::space);
}

GridSpec GridSpec::as_space() const noexcept { return GridSpec(d_, n_, box_len_, Domain::space); }

GridSpec GridSpec::as_frequency() const noexcept { return GridSpec(d_, n_, box_len_, Domain::frequency); }

std::array<int, 3> GridSpec::unflatten(std::size_t flat) const noexcept {
  std::array<int, 3> idx{0, 0, 0};
  for (int a = d_ - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(flat % static_cast<std::size_t>(n_));
    flat /= static_cast<std::size_t>(n_);
  }
  return idx;
}

std::size_t GridSpec::flatten(const std::array<int, 3>& idx) const noexcept {
  std::size_t flat = 0;
  for (int a = 0; a < d_; ++a) flat = flat * static_cast<std::size_t>(n_) + static_cast<std::size_t>(idx[a]);
  return flat;
}

Point GridSpec::point(std::size_t flat) const noexcept {
  const auto idx = unflatten(flat);
  Point p{0.0, 0.0, 0.0};
  for (int a = 0; a < d_; ++a) p[a] = coordinate(idx[a]);
  return p;
}

double norm(const Point& p, int d) noexcept {
  double s = 0.0;
  for (int a = 0; a < d; ++a) s += p[a] * p[a];
  return std::sqrt(s);
}

}  // namespace obslab
