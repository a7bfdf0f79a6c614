#pragma once

// Characteristic polynomials over Z/p for a 61-bit prime: the fast surrogate
// used to bucket graphs before any exact work.  Hessenberg reduction (O(n^3))
// followed by the standard last-column recurrence.

#include <cstdint>
#include <vector>

namespace cospec {

// Mersenne prime 2^61 - 1; fits mulmod into unsigned __int128 comfortably.
inline constexpr uint64_t kFingerprintPrime = (uint64_t(1) << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p);
uint64_t powmod(uint64_t a, uint64_t e, uint64_t p);
uint64_t invmod(uint64_t a, uint64_t p);  // p prime, a != 0 mod p

struct ModMatrix {
  int n = 0;
  std::vector<uint64_t> a;  // row-major, entries already reduced mod p
  explicit ModMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0) {}
  uint64_t& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  uint64_t at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

// Coefficients of det(xI - M) mod p, ascending, monic of degree n.
std::vector<uint64_t> charpoly_mod(ModMatrix m, uint64_t p);

}  // namespace cospec
