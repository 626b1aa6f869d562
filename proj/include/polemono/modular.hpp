#pragma once

#include <cstdint>

#include "polemono/errors.hpp"

namespace polemono {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Montgomery arithmetic modulo an odd prime p < 2^63. Values are kept in
// Montgomery form (x * 2^64 mod p) throughout an elimination; conversion
// happens only at the boundary.
struct Montgomery {
  u64 p = 0;
  u64 ninv = 0;  // -p^{-1} mod 2^64
  u64 r2 = 0;    // 2^128 mod p
  u64 one = 0;   // 2^64 mod p

  static Montgomery make(u64 p) {
    if (p < 3 || (p & 1) == 0) throw InternalError("modulus must be an odd prime >= 3");
    Montgomery m;
    m.p = p;
    u64 inv = p;  // Newton iteration doubles correct bits each round
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    m.ninv = ~inv + 1;
    m.one = static_cast<u64>((u128(1) << 64) % p);
    m.r2 = static_cast<u64>(u128(m.one) * m.one % p);
    return m;
  }

  u64 redc(u128 t) const {
    u64 q = static_cast<u64>(t) * ninv;
    u64 r = static_cast<u64>((t + u128(q) * p) >> 64);
    return r >= p ? r - p : r;
  }

  u64 mul(u64 a, u64 b) const { return redc(u128(a) * b); }
  u64 add(u64 a, u64 b) const {
    u64 r = a + b;
    return r >= p ? r - p : r;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }

  u64 to(u64 a) const { return mul(a % p, r2); }
  u64 from(u64 a) const { return redc(a); }

  u64 pow(u64 base, u64 e) const {  // base in Montgomery form
    u64 r = one;
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }

  u64 inv(u64 a) const {  // Montgomery form in and out; p prime
    return pow(a, p - 2);
  }
};

namespace detail {

inline u64 mulmod_u128(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

inline u64 powmod_u128(u64 base, u64 e, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod_u128(r, base, m);
    base = mulmod_u128(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin; the fixed base set decides primality exactly
// for all 64-bit integers.
inline bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = detail::powmod_u128(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod_u128(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

inline u64 splitmix64(u64 x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

// Deterministic sequence of ~62-bit primes derived from a seed. Index i
// always yields the same prime for the same seed, which is what makes whole
// pipeline runs reproducible; prime retries after a bad reduction simply
// walk further along the sequence.
class PrimeSequence {
 public:
  explicit PrimeSequence(u64 seed) : seed_(seed) {}

  u64 at(u64 index) const {
    u64 h = splitmix64(seed_ ^ (0x8695fd19a402bbb1ull * (index + 1)));
    u64 cand = (u64(1) << 61) | (h & ((u64(1) << 61) - 1)) | 1;
    while (!is_prime_u64(cand)) cand += 2;
    return cand;
  }

 private:
  u64 seed_;
};

}  // namespace polemono
