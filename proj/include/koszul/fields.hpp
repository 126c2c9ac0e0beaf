#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "koszul/errors.hpp"
#include "koszul/gfp_kernels.hpp"

namespace koszul {

// Deterministic for all 32-bit inputs (Miller-Rabin with fixed base set).
bool is_prime_u32(uint32_t n);

// Exact rational arithmetic. mpq_class keeps values in canonical reduced form
// (gcd(num, den) = 1, den > 0) after every operation.
class Rationals {
 public:
  using Elem = mpq_class;
  static constexpr bool is_prime_field = false;

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool is_one(const Elem& a) const { return a == 1; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return Elem(1) / a; }
  std::string to_string(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "q"; }
};

// Residue field mod a prime p, 2 <= p < 2^31. Elements are canonical residues
// in [0, p). Row-level bulk operations go through runtime-dispatched kernels.
class PrimeField {
 public:
  using Elem = uint32_t;
  static constexpr bool is_prime_field = true;

  explicit PrimeField(uint32_t p);

  uint32_t modulus() const { return p_; }
  const gfp::Kernels& kernels() const { return kernels_; }

  Elem zero() const { return 0; }
  Elem one() const { return p_ > 1 ? 1u : 0u; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  bool eq(Elem a, Elem b) const { return a == b; }
  Elem add(Elem a, Elem b) const {
    uint32_t s = a + b;
    return s >= p_ || s < a ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<uint64_t>(a) * b) % p_);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string name() const { return "gf:" + std::to_string(p_); }

 private:
  uint32_t p_;
  gfp::Kernels kernels_;
};

// Runtime field selector: "q" or "gf:<prime>".
struct FieldDesc {
  bool rational = true;
  uint32_t p = 0;

  static FieldDesc q() { return FieldDesc{true, 0}; }
  static FieldDesc gf(uint32_t prime);
  static FieldDesc parse(const std::string& selector);

  std::string name() const { return rational ? "q" : "gf:" + std::to_string(p); }
  bool operator==(const FieldDesc&) const = default;
};

template <class Fn>
decltype(auto) with_field(const FieldDesc& fd, Fn&& fn) {
  if (fd.rational) return fn(Rationals{});
  return fn(PrimeField(fd.p));
}

}  // namespace koszul
