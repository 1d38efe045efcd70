#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "obslab/core/grid.hpp"

namespace obslab {

// Indicator of a subset of the periodic box (or of the frequency lattice),
// one byte per cell, membership decided at cell centres.
class Mask {
 public:
  Mask(const GridSpec& grid, std::vector<std::uint8_t> bits);
  static Mask filled(const GridSpec& grid, bool value);

  const GridSpec& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return bits_.size(); }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }
  bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }

  std::size_t count() const noexcept { return count_; }
  // count * cell volume
  double measure() const noexcept;
  // 0.0 / 1.0 per cell, for the weighted kernels
  std::vector<double> weights() const;

  Mask complement() const;

  friend Mask operator|(const Mask& a, const Mask& b);
  friend Mask operator&(const Mask& a, const Mask& b);
  friend bool operator==(const Mask& a, const Mask& b) { return a.grid_ == b.grid_ && a.bits_ == b.bits_; }

 private:
  GridSpec grid_;
  std::vector<std::uint8_t> bits_;
  std::size_t count_;
};

}  // namespace obslab
