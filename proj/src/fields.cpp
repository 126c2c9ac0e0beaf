#include "koszul/fields.hpp"

#include <stdexcept>
#include <string>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin. Bases {2,3,5,7} decide primality for all
// n < 3'215'031'751, which covers the full uint32_t range.
bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t p : {2u, 3u, 5u, 7u}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull}) {
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

PrimeField::PrimeField(uint32_t p) : p_(p), kernels_(gfp::select(p)) {
  if (!is_prime_u32(p)) throw std::invalid_argument("PrimeField: modulus is not prime");
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
  // extended Euclid on (a, p); invariant a*x0 + p*? = r0
  int64_t r0 = a, r1 = p_, x0 = 1, x1 = 0;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    r0 -= q * r1; std::swap(r0, r1);
    x0 -= q * x1; std::swap(x0, x1);
  }
  int64_t x = x0 % static_cast<int64_t>(p_);
  if (x < 0) x += p_;
  return static_cast<uint32_t>(x);
}

FieldDesc FieldDesc::gf(uint32_t prime) {
  if (prime < 2 || prime >= (1u << 31) || !is_prime_u32(prime))
    throw ParseError("field selector: modulus must be a prime below 2^31");
  return FieldDesc{false, prime};
}

FieldDesc FieldDesc::parse(const std::string& selector) {
  if (selector == "q" || selector == "Q") return q();
  const std::string prefix = "gf:";
  if (selector.rfind(prefix, 0) == 0) {
    const std::string digits = selector.substr(prefix.size());
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("field selector: expected gf:<prime>, got '" + selector + "'");
    unsigned long long v;
    try {
      v = std::stoull(digits);
    } catch (const std::exception&) {
      throw ParseError("field selector: modulus out of range in '" + selector + "'");
    }
    if (v < 2 || v > 0xFFFFFFFFull)
      throw ParseError("field selector: modulus out of range in '" + selector + "'");
    if (!is_prime_u32(static_cast<uint32_t>(v)))
      throw ParseError("field selector: " + digits + " is not prime");
    return gf(static_cast<uint32_t>(v));
  }
  throw ParseError("field selector: expected 'q' or 'gf:<prime>', got '" + selector + "'");
}

}  // namespace koszul
