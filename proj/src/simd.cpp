#include "mordell/simd.hpp"

#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define MORDELL_X86 1
#endif

namespace mordell {

namespace {

constexpr uint64_t square_mask64() {
  uint64_t m = 0;
  for (uint64_t r = 0; r < 64; ++r) m |= uint64_t{1} << ((r * r) & 63);
  return m;
}
constexpr uint64_t kMask = square_mask64();

void prefilter_scalar(const int64_t* v, size_t n, uint8_t* out) {
  for (size_t i = 0; i < n; ++i)
    out[i] = v[i] >= 0 && ((kMask >> (static_cast<uint64_t>(v[i]) & 63)) & 1);
}

#ifdef MORDELL_X86
__attribute__((target("avx2"))) void prefilter_avx2(const int64_t* v, size_t n,
                                                    uint8_t* out) {
  const __m256i mask = _mm256_set1_epi64x(static_cast<long long>(kMask));
  const __m256i low6 = _mm256_set1_epi64x(63);
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i neg1 = _mm256_set1_epi64x(-1);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    __m256i bit = _mm256_and_si256(_mm256_srlv_epi64(mask, _mm256_and_si256(x, low6)), one);
    // Clear lanes with x < 0, i.e. x <= -1.
    __m256i nonneg = _mm256_cmpgt_epi64(x, neg1);
    bit = _mm256_and_si256(bit, nonneg);
    alignas(32) int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), bit);
    for (int j = 0; j < 4; ++j) out[i + j] = static_cast<uint8_t>(lanes[j]);
  }
  prefilter_scalar(v + i, n - i, out + i);
}
#endif

}  // namespace

bool kernel_available(SimdKernel k) {
  if (k == SimdKernel::Scalar) return true;
#ifdef MORDELL_X86
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

SimdKernel active_kernel() {
  static const SimdKernel k = [] {
    const char* env = std::getenv("MORDELL_SIMD");
    if (env && std::strcmp(env, "scalar") == 0) return SimdKernel::Scalar;
    return kernel_available(SimdKernel::Avx2) ? SimdKernel::Avx2 : SimdKernel::Scalar;
  }();
  return k;
}

const char* kernel_name(SimdKernel k) { return k == SimdKernel::Avx2 ? "avx2" : "scalar"; }

void square_prefilter(SimdKernel k, const int64_t* v, size_t n, uint8_t* out) {
#ifdef MORDELL_X86
  if (k == SimdKernel::Avx2 && kernel_available(k)) {
    prefilter_avx2(v, n, out);
    return;
  }
#endif
  (void)k;
  prefilter_scalar(v, n, out);
}

}  // namespace mordell
