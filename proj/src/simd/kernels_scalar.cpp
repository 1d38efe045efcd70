#include "simd/kernels_impl.hpp"

#include <cmath>
#include <limits>

namespace obslab::simd::detail {

namespace {

// Written out by hand: std::complex multiplication goes through the Annex G
// inf/nan handling, which is both slow and not what the vector path does.
inline void mul_into(double& xr, double& xi, double sr, double si) {
  const double r = xr * sr - xi * si;
  const double i = xr * si + xi * sr;
  xr = r;
  xi = i;
}

void scale_real(cplx* x, const double* w, std::size_t n) {
  auto* p = reinterpret_cast<double*>(x);
  for (std::size_t i = 0; i < n; ++i) {
    p[2 * i] *= w[i];
    p[2 * i + 1] *= w[i];
  }
}

void scale_complex(cplx* x, const cplx* s, std::size_t n) {
  auto* p = reinterpret_cast<double*>(x);
  const auto* q = reinterpret_cast<const double*>(s);
  for (std::size_t i = 0; i < n; ++i) mul_into(p[2 * i], p[2 * i + 1], q[2 * i], q[2 * i + 1]);
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(x);
  auto* q = reinterpret_cast<double*>(y);
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = p[2 * i];
    const double xi = p[2 * i + 1];
    q[2 * i] += ar * xr - ai * xi;
    q[2 * i + 1] += ar * xi + ai * xr;
  }
}

double norm_sq(const cplx* x, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < 2 * n; ++i) acc += p[i] * p[i];
  return acc;
}

double weighted_norm_sq(const cplx* x, const double* w, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(x);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += w[i] * (p[2 * i] * p[2 * i] + p[2 * i + 1] * p[2 * i + 1]);
  return acc;
}

cplx dot(const cplx* a, const cplx* b, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(a);
  const auto* q = reinterpret_cast<const double*>(b);
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    re += p[2 * i] * q[2 * i] + p[2 * i + 1] * q[2 * i + 1];
    im += p[2 * i] * q[2 * i + 1] - p[2 * i + 1] * q[2 * i];
  }
  return {re, im};
}

RowMin admissible_gap_min(const double* power, const double* tau, std::size_t n, double lambda,
                          double root, double width, double inv_den) {
  RowMin out{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < n; ++i) {
    if (std::fabs(tau[i] - root) > width) {
      ++out.count;
      const double v = std::fabs(power[i] - lambda) * inv_den;
      if (v < out.value) out.value = v;
    }
  }
  return out;
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar",  scale_real,       scale_complex, axpy,
                                 norm_sq,   weighted_norm_sq, dot,           admissible_gap_min};
  return table;
}

}  // namespace obslab::simd::detail
