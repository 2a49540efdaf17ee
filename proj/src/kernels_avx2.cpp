// AVX2 variants of the bitset kernels. This translation unit is compiled
// with -mavx2; callers must check avx2_supported() before dispatching here.

#include "redusat/kernels.hpp"

#if defined(REDUSAT_HAVE_AVX2)

#include <immintrin.h>

namespace redusat::kernels {

namespace {

bool subset_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i diff = _mm256_andnot_si256(vb, va);  // va & ~vb
    if (!_mm256_testz_si256(diff, diff)) return false;
  }
  for (; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void or_inplace_avx2(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(a + i), _mm256_or_si256(va, vb));
  }
  for (; i < n; ++i) a[i] |= b[i];
}

bool intersects_avx2(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  for (; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

const Ops kAvx2{subset_avx2, or_inplace_avx2, intersects_avx2, "avx2"};

}  // namespace

const Ops& avx2_ops() { return kAvx2; }

}  // namespace redusat::kernels

#endif  // REDUSAT_HAVE_AVX2
