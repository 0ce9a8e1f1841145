#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace domcol {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

inline u64 add_mod(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

// Reduction specialised for 2^61 - 1.
inline u64 mul_m61(u64 a, u64 b) {
  u128 z = static_cast<u128>(a) * b;
  u64 lo = static_cast<u64>(z) & kMersenne61;
  u64 hi = static_cast<u64>(z >> 61);
  u64 s = lo + hi;
  return s >= kMersenne61 ? s - kMersenne61 : s;
}

u64 pow_mod(u64 a, u64 e, u64 p);
/// Inverse of a != 0 modulo prime p.
u64 inv_mod(u64 a, u64 p);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(u64 n);
/// Uniformly random prime in [2^(bits-1), 2^bits), bits in [3, 63].
u64 random_prime(std::mt19937_64& rng, int bits);

/// Dense square matrix over Z_p, row major.
struct FieldMatrix {
  int dim = 0;
  std::vector<u64> a;

  explicit FieldMatrix(int d = 0) : dim(d), a(static_cast<std::size_t>(d) * d, 0) {}
  u64& at(int r, int c) { return a[static_cast<std::size_t>(r) * dim + c]; }
  u64 at(int r, int c) const { return a[static_cast<std::size_t>(r) * dim + c]; }
};

/// det(m) mod p by Gaussian elimination; 0 when singular. The 0x0 determinant is 1.
u64 determinant_mod(FieldMatrix m, u64 p);

}  // namespace domcol
