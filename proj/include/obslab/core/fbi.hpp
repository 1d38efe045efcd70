#pragma once

#include <complex>
#include <vector>

namespace obslab {

// Samples gamma(t0 + k dt), k = 0 .. values.size() - 1.
struct TimeSeries {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<std::complex<double>> values;

  double t_end() const noexcept { return t0 + dt * static_cast<double>(values.size() - 1); }
};

// T_h gamma(z) = 2^{1/4} (2 pi h)^{-3/4} int e^{-(z+t)^2/(2h)} gamma(t) dt,
// composite trapezoid on the series grid. 0 < h < 1; the Gaussian window
// around t = -Re z must lose at most 1e-12 of its mass outside the series.
std::complex<double> fbi_transform(const TimeSeries& gamma, double h, std::complex<double> z);

}  // namespace obslab
