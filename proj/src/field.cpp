#include "domcol/field.hpp"

#include <utility>

#include "domcol/errors.hpp"

namespace domcol {

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) {
  if (a % p == 0) throw std::domain_error("inverse of zero");
  return pow_mod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a known deterministic witness set below 2^64.
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

u64 random_prime(std::mt19937_64& rng, int bits) {
  if (bits < 3 || bits > 63) throw UsageError("random_prime: bits must be in [3,63]");
  std::uniform_int_distribution<u64> dist(u64{1} << (bits - 1), (u64{1} << bits) - 1);
  for (;;) {
    u64 c = dist(rng) | 1;
    if (is_prime(c)) return c;
  }
}

u64 determinant_mod(FieldMatrix m, u64 p) {
  const int n = m.dim;
  u64 det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (m.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int c = col; c < n; ++c) std::swap(m.at(pivot, c), m.at(col, c));
      det = sub_mod(0, det, p);
    }
    u64 pv = m.at(col, col);
    det = mul_mod(det, pv, p);
    u64 inv = inv_mod(pv, p);
    for (int r = col + 1; r < n; ++r) {
      u64 f = m.at(r, col);
      if (f == 0) continue;
      f = mul_mod(f, inv, p);
      for (int c = col; c < n; ++c) m.at(r, c) = sub_mod(m.at(r, c), mul_mod(f, m.at(col, c), p), p);
    }
  }
  return det;
}

}  // namespace domcol
