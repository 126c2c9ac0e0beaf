#include "koszul/gfp_kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace koszul::gfp {

void axpy_scalar(uint32_t* y, const uint32_t* x, uint32_t c, size_t n, uint32_t p) {
  for (size_t i = 0; i < n; ++i) {
    uint64_t t = y[i] + static_cast<uint64_t>(c) * x[i];
    y[i] = static_cast<uint32_t>(t % p);
  }
}

void scale_scalar(uint32_t* x, uint32_t c, size_t n, uint32_t p) {
  for (size_t i = 0; i < n; ++i)
    x[i] = static_cast<uint32_t>((static_cast<uint64_t>(c) * x[i]) % p);
}

bool avx2_usable() {
#if KOSZUL_HAVE_AVX2
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Kernels select(uint32_t p) {
  const char* env = std::getenv("KOSZUL_SIMD");
  std::string mode = env ? env : "auto";
  Kernels scalar{&axpy_scalar, &scale_scalar, "scalar"};
  if (mode == "scalar") return scalar;
#if KOSZUL_HAVE_AVX2
  // SIMD path keeps every intermediate below 2^31; only small moduli qualify.
  if ((mode == "avx2" || mode == "auto") && p < kSimdPrimeLimit && avx2_usable())
    return Kernels{&axpy_avx2, &scale_avx2, "avx2"};
#endif
  return scalar;
}

}  // namespace koszul::gfp
