#pragma once

// Square prefilter for batches of int64 values: keep v >= 0 whose residue
// mod 64 is a square. A scalar kernel and an AVX2 kernel, picked at runtime.

#include <cstddef>
#include <cstdint>

namespace mordell {

enum class SimdKernel { Scalar, Avx2 };

// Best kernel the CPU supports; MORDELL_SIMD=scalar forces the scalar one.
SimdKernel active_kernel();
const char* kernel_name(SimdKernel k);
bool kernel_available(SimdKernel k);

// out[i] = 1 if v[i] may be a perfect square, else 0.
void square_prefilter(SimdKernel k, const int64_t* v, size_t n, uint8_t* out);
inline void square_prefilter(const int64_t* v, size_t n, uint8_t* out) {
  square_prefilter(active_kernel(), v, n, out);
}

}  // namespace mordell
