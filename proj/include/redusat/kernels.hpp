#pragma once

#include <cstddef>
#include <cstdint>

// Word-parallel kernels for the dense clause-id bitsets that back the
// occurrence index. The closure engine spends nearly all of its time in
// subset tests and unions over these word arrays, so each kernel has a
// scalar reference implementation and an AVX2 variant; the backend is
// picked once at startup (overridable for tests and benchmarks).

namespace redusat::kernels {

enum class Backend { scalar, avx2 };

struct Ops {
  // true iff (a & ~b) == 0 over n words
  bool (*subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // a |= b over n words
  void (*or_inplace)(std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  // true iff (a & b) != 0 over n words
  bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
  const char* name;
};

const Ops& scalar_ops();
#if defined(REDUSAT_HAVE_AVX2)
const Ops& avx2_ops();
#endif

bool avx2_supported();

// Active backend: AVX2 when the CPU has it, else scalar. The environment
// variable REDUSAT_KERNELS=scalar|avx2 overrides the automatic choice.
Backend active_backend();
const Ops& active();
void force_backend(Backend b);

}  // namespace redusat::kernels
