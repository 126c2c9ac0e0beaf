#pragma once

#include <cstddef>
#include <cstdint>

namespace koszul::gfp {

// Row kernels for dense elimination mod p:
//   axpy:  y[i] <- (y[i] + c * x[i]) mod p
//   scale: x[i] <- (c * x[i]) mod p
// Inputs are canonical residues in [0, p); outputs likewise.
using AxpyFn = void (*)(uint32_t* y, const uint32_t* x, uint32_t c, size_t n,
                        uint32_t p);
using ScaleFn = void (*)(uint32_t* x, uint32_t c, size_t n, uint32_t p);

// Portable reference variants, valid for any p < 2^31.
void axpy_scalar(uint32_t* y, const uint32_t* x, uint32_t c, size_t n, uint32_t p);
void scale_scalar(uint32_t* x, uint32_t c, size_t n, uint32_t p);

// The vector variants require p < kSimdPrimeLimit so that c*x + y stays below
// 2^31 (46340^2 + 46340 < 2^31), letting 32-bit lane products be exact.
inline constexpr uint32_t kSimdPrimeLimit = 46341;

#if KOSZUL_HAVE_AVX2
void axpy_avx2(uint32_t* y, const uint32_t* x, uint32_t c, size_t n, uint32_t p);
void scale_avx2(uint32_t* x, uint32_t c, size_t n, uint32_t p);
#endif

struct Kernels {
  AxpyFn axpy;
  ScaleFn scale;
  const char* variant;  // "scalar" or "avx2"
};

// Picks the fastest variant usable for this modulus on this machine.
// KOSZUL_SIMD=scalar|avx2|auto overrides (avx2 falls back when ineligible).
Kernels select(uint32_t p);

// True when the AVX2 variant was compiled in and the CPU supports it.
bool avx2_usable();

}  // namespace koszul::gfp
