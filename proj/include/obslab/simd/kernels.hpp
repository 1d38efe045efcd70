#pragma once

// Data-parallel inner loops shared by every spectral operator.
//
// Each kernel has a scalar reference implementation and, when the build and
// the CPU allow it, an AVX2/FMA variant. The active table is chosen once at
// first use; OBSLAB_KERNELS=scalar in the environment forces the reference
// path. Complex arrays are std::complex<double>, i.e. interleaved (re, im).

#include <complex>
#include <cstddef>
#include <string_view>

namespace obslab::simd {

using cplx = std::complex<double>;

struct RowMin {
  double value;       // +inf when no admissible entry
  std::size_t count;  // admissible entries seen
};

struct KernelTable {
  std::string_view name;

  // x[i] *= w[i]
  void (*scale_real)(cplx* x, const double* w, std::size_t n);
  // x[i] *= s[i]
  void (*scale_complex)(cplx* x, const cplx* s, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy)(cplx alpha, const cplx* x, cplx* y, std::size_t n);
  // sum |x[i]|^2
  double (*norm_sq)(const cplx* x, std::size_t n);
  // sum w[i] |x[i]|^2
  double (*weighted_norm_sq)(const cplx* x, const double* w, std::size_t n);
  // sum conj(a[i]) b[i]
  cplx (*dot)(const cplx* a, const cplx* b, std::size_t n);
  // min over {i : |tau[i] - root| > width} of |power[i] - lambda| * inv_den
  RowMin (*admissible_gap_min)(const double* power, const double* tau, std::size_t n,
                               double lambda, double root, double width, double inv_den);
};

const KernelTable& scalar_kernels();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2_kernels();

// The dispatched table.
const KernelTable& kernels();

}  // namespace obslab::simd
