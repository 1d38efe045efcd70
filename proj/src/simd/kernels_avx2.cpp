// AVX2 + FMA variants. This translation unit is the only one compiled with
// -mavx2 -mfma; nothing here may be called unless the dispatcher saw both
// features at runtime.

#include "simd/kernels_impl.hpp"

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace obslab::simd::detail {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// [w0, w1] -> [w0, w0, w1, w1]
inline __m256d spread_pair(const double* w) {
  const __m128d p = _mm_loadu_pd(w);
  return _mm256_set_m128d(_mm_unpackhi_pd(p, p), _mm_unpacklo_pd(p, p));
}

// Two complex products per register: (a + ib)(c + id).
inline __m256d cmul(__m256d x, __m256d s) {
  const __m256d s_re = _mm256_movedup_pd(s);
  const __m256d s_im = _mm256_permute_pd(s, 0xF);
  const __m256d x_sw = _mm256_permute_pd(x, 0x5);
  return _mm256_fmaddsub_pd(x, s_re, _mm256_mul_pd(x_sw, s_im));
}

void scale_real(cplx* x, const double* w, std::size_t n) {
  auto* p = reinterpret_cast<double*>(x);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(p + 2 * i);
    _mm256_storeu_pd(p + 2 * i, _mm256_mul_pd(v, spread_pair(w + i)));
  }
  for (; i < n; ++i) {
    p[2 * i] *= w[i];
    p[2 * i + 1] *= w[i];
  }
}

void scale_complex(cplx* x, const cplx* s, std::size_t n) {
  auto* p = reinterpret_cast<double*>(x);
  const auto* q = reinterpret_cast<const double*>(s);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(p + 2 * i);
    const __m256d m = _mm256_loadu_pd(q + 2 * i);
    _mm256_storeu_pd(p + 2 * i, cmul(v, m));
  }
  for (; i < n; ++i) {
    const double xr = p[2 * i];
    const double xi = p[2 * i + 1];
    p[2 * i] = xr * q[2 * i] - xi * q[2 * i + 1];
    p[2 * i + 1] = xr * q[2 * i + 1] + xi * q[2 * i];
  }
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(x);
  auto* q = reinterpret_cast<double*>(y);
  const __m256d a_re = _mm256_set1_pd(alpha.real());
  const __m256d a_im = _mm256_setr_pd(-alpha.imag(), alpha.imag(), -alpha.imag(), alpha.imag());
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(p + 2 * i);
    const __m256d t = _mm256_fmadd_pd(v, a_re, _mm256_mul_pd(_mm256_permute_pd(v, 0x5), a_im));
    _mm256_storeu_pd(q + 2 * i, _mm256_add_pd(_mm256_loadu_pd(q + 2 * i), t));
  }
  for (; i < n; ++i) {
    const double xr = p[2 * i];
    const double xi = p[2 * i + 1];
    q[2 * i] += alpha.real() * xr - alpha.imag() * xi;
    q[2 * i + 1] += alpha.real() * xi + alpha.imag() * xr;
  }
}

double norm_sq(const cplx* x, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(x);
  const std::size_t m = 2 * n;
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= m; i += 8) {
    const __m256d a = _mm256_loadu_pd(p + i);
    const __m256d b = _mm256_loadu_pd(p + i + 4);
    acc0 = _mm256_fmadd_pd(a, a, acc0);
    acc1 = _mm256_fmadd_pd(b, b, acc1);
  }
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < m; ++i) acc += p[i] * p[i];
  return acc;
}

double weighted_norm_sq(const cplx* x, const double* w, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(x);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d v = _mm256_loadu_pd(p + 2 * i);
    acc = _mm256_fmadd_pd(_mm256_mul_pd(v, v), spread_pair(w + i), acc);
  }
  double out = hsum(acc);
  for (; i < n; ++i) out += w[i] * (p[2 * i] * p[2 * i] + p[2 * i + 1] * p[2 * i + 1]);
  return out;
}

cplx dot(const cplx* a, const cplx* b, std::size_t n) {
  const auto* p = reinterpret_cast<const double*>(a);
  const auto* q = reinterpret_cast<const double*>(b);
  __m256d acc_re = _mm256_setzero_pd();
  __m256d acc_im = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d u = _mm256_loadu_pd(p + 2 * i);
    const __m256d v = _mm256_loadu_pd(q + 2 * i);
    acc_re = _mm256_fmadd_pd(u, v, acc_re);
    // lanes: [ur*vi, ui*vr, ...]
    acc_im = _mm256_fmadd_pd(u, _mm256_permute_pd(v, 0x5), acc_im);
  }
  const __m256d sign = _mm256_setr_pd(1.0, -1.0, 1.0, -1.0);
  double re = hsum(acc_re);
  double im = hsum(_mm256_mul_pd(acc_im, sign));
  for (; i < n; ++i) {
    re += p[2 * i] * q[2 * i] + p[2 * i + 1] * q[2 * i + 1];
    im += p[2 * i] * q[2 * i + 1] - p[2 * i + 1] * q[2 * i];
  }
  return {re, im};
}

RowMin admissible_gap_min(const double* power, const double* tau, std::size_t n, double lambda,
                          double root, double width, double inv_den) {
  const double inf = std::numeric_limits<double>::infinity();
  const __m256d abs_mask = _mm256_castsi256_pd(_mm256_set1_epi64x(0x7fffffffffffffffLL));
  const __m256d v_lambda = _mm256_set1_pd(lambda);
  const __m256d v_root = _mm256_set1_pd(root);
  const __m256d v_width = _mm256_set1_pd(width);
  const __m256d v_inv = _mm256_set1_pd(inv_den);
  const __m256d v_inf = _mm256_set1_pd(inf);
  __m256d best = v_inf;
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d t = _mm256_loadu_pd(tau + i);
    const __m256d dist = _mm256_and_pd(_mm256_sub_pd(t, v_root), abs_mask);
    const __m256d ok = _mm256_cmp_pd(dist, v_width, _CMP_GT_OQ);
    count += static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_pd(ok)));
    const __m256d gap = _mm256_and_pd(_mm256_sub_pd(_mm256_loadu_pd(power + i), v_lambda), abs_mask);
    const __m256d val = _mm256_blendv_pd(v_inf, _mm256_mul_pd(gap, v_inv), ok);
    best = _mm256_min_pd(best, val);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  RowMin out{inf, count};
  for (double l : lanes) out.value = l < out.value ? l : out.value;
  for (; i < n; ++i) {
    if (std::fabs(tau[i] - root) > width) {
      ++out.count;
      const double v = std::fabs(power[i] - lambda) * inv_den;
      if (v < out.value) out.value = v;
    }
  }
  return out;
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2",  scale_real,       scale_complex, axpy,
                                 norm_sq, weighted_norm_sq, dot,           admissible_gap_min};
  return table;
}

}  // namespace obslab::simd::detail
