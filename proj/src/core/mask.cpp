#include "obslab/core/mask.hpp"

#include <algorithm>
#include <string>

#include "obslab/core/errors.hpp"

namespace obslab {

Mask::Mask(const GridSpec& grid, std::vector<std::uint8_t> bits) : grid_(grid), bits_(std::move(bits)), count_(0) {
  if (bits_.size() != grid_.size())
    throw PreconditionError("mask has " + std::to_string(bits_.size()) + " cells, grid needs " +
                            std::to_string(grid_.size()));
  for (auto& b : bits_) {
    b = b ? 1 : 0;
    count_ += b;
  }
}

Mask Mask::filled(const GridSpec& grid, bool value) {
  return Mask(grid, std::vector<std::uint8_t>(grid.size(), value ? 1 : 0));
}

double Mask::measure() const noexcept { return static_cast<double>(count_) * grid_.cell_volume(); }

std::vector<double> Mask::weights() const {
  std::vector<double> w(bits_.size());
  std::transform(bits_.begin(), bits_.end(), w.begin(), [](std::uint8_t b) { return b ? 1.0 : 0.0; });
  return w;
}

Mask Mask::complement() const {
  std::vector<std::uint8_t> out(bits_.size());
  std::transform(bits_.begin(), bits_.end(), out.begin(), [](std::uint8_t b) -> std::uint8_t { return b ? 0 : 1; });
  return Mask(grid_, std::move(out));
}

Mask operator|(const Mask& a, const Mask& b) {
  if (!(a.grid_ == b.grid_)) throw PreconditionError("grid mismatch in mask union");
  std::vector<std::uint8_t> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.bits_[i] | b.bits_[i];
  return Mask(a.grid_, std::move(out));
}

Mask operator&(const Mask& a, const Mask& b) {
  if (!(a.grid_ == b.grid_)) throw PreconditionError("grid mismatch in mask intersection");
  std::vector<std::uint8_t> out(a.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.bits_[i] & b.bits_[i];
  return Mask(a.grid_, std::move(out));
}

}  // namespace obslab
