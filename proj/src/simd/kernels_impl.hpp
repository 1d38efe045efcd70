#pragma once

#include "obslab/simd/kernels.hpp"

namespace obslab::simd::detail {

const KernelTable& scalar_table();

#if OBSLAB_HAVE_AVX2
const KernelTable& avx2_table();
#endif

}  // namespace obslab::simd::detail
