#include "redusat/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace redusat::kernels {

namespace {

bool subset_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

void or_inplace_scalar(std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) a[i] |= b[i];
}

bool intersects_scalar(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] & b[i]) return true;
  return false;
}

const Ops kScalar{subset_scalar, or_inplace_scalar, intersects_scalar, "scalar"};

Backend detect() {
  if (const char* env = std::getenv("REDUSAT_KERNELS")) {
    std::string v(env);
    if (v == "scalar") return Backend::scalar;
    if (v == "avx2") {
      if (!avx2_supported())
        throw std::runtime_error("REDUSAT_KERNELS=avx2 but CPU/build lacks AVX2");
      return Backend::avx2;
    }
  }
  return avx2_supported() ? Backend::avx2 : Backend::scalar;
}

Backend g_backend = detect();

}  // namespace

const Ops& scalar_ops() { return kScalar; }

bool avx2_supported() {
#if defined(REDUSAT_HAVE_AVX2)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() { return g_backend; }

const Ops& active() {
#if defined(REDUSAT_HAVE_AVX2)
  if (g_backend == Backend::avx2) return avx2_ops();
#endif
  return kScalar;
}

void force_backend(Backend b) {
  if (b == Backend::avx2 && !avx2_supported())
    throw std::runtime_error("AVX2 backend unavailable on this machine");
  g_backend = b;
}

}  // namespace redusat::kernels
