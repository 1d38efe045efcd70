#pragma once

#include <array>
#include <cstddef>

namespace obslab {

using Point = std::array<double, 3>;

enum class Domain : unsigned char { space, frequency };

// Periodic box [-L/2, L/2)^d sampled at n points per axis, or its frequency
// lattice. Sample i along an axis sits at (i - n/2) * spacing, so index n/2 is
// the origin and index 0 is the unpaired Nyquist point.
//
// A spatial grid with box length L has spacing L/n; its dual frequency lattice
// has spacing 1/L and extent n/L. dual() is an exact involution: the box
// length is carried unchanged and only the domain tag flips.
class GridSpec {
 public:
  // make_grid: d in {1,2,3}, n a power of two >= 8, box_len > 0.
  static GridSpec make(int d, int n, double box_len);

  int dim() const noexcept { return d_; }
  int n() const noexcept { return n_; }
  double box_len() const noexcept { return box_len_; }
  Domain domain() const noexcept { return domain_; }
  bool is_frequency() const noexcept { return domain_ == Domain::frequency; }

  // Distance between neighbouring samples along an axis.
  double spacing() const noexcept;
  // n * spacing: the side of the (periodic) region this grid covers.
  double extent() const noexcept;
  double cell_volume() const noexcept;
  std::size_t size() const noexcept { return size_; }

  double coordinate(int index) const noexcept { return (index - n_ / 2) * spacing(); }
  // Largest |coordinate| on the frequency lattice: n / (2L).
  double nyquist() const noexcept { return n_ / (2.0 * box_len_); }

  GridSpec dual() const noexcept;
  GridSpec as_space() const noexcept;
  GridSpec as_frequency() const noexcept;

  // Row-major multi-index, last axis fastest. Unused trailing axes are 0.
  std::array<int, 3> unflatten(std::size_t flat) const noexcept;
  std::size_t flatten(const std::array<int, 3>& idx) const noexcept;
  Point point(std::size_t flat) const noexcept;

  friend bool operator==(const GridSpec& a, const GridSpec& b) noexcept {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.box_len_ == b.box_len_ && a.domain_ == b.domain_;
  }

 private:
  GridSpec(int d, int n, double box_len, Domain domain) noexcept;

  int d_;
  int n_;
  double box_len_;
  Domain domain_;
  std::size_t size_;
};

inline GridSpec make_grid(int d, int n, double box_len) { return GridSpec::make(d, n, box_len); }

double norm(const Point& p, int d) noexcept;

}  // namespace obslab
