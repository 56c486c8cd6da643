#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"

namespace sparsemul::nt {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 r = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) r = mul_mod(r, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return r;
}

/// Deterministic Miller-Rabin for all 64-bit n.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
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

namespace detail {

// Brent's variant of Pollard rho; n must be an odd composite.
inline u64 rho_factor(u64 n) {
  for (u64 c = 1;; ++c) {
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    u64 r = 1;
    constexpr u64 kBatch = 128;
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += kBatch) {
        ys = y;
        for (u64 i = 0; i < std::min(kBatch, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
      }
      r <<= 1;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void split(u64 n, std::vector<u64>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  const u64 d = rho_factor(n);
  split(d, primes);
  split(n / d, primes);
}

}  // namespace detail

struct PrimePower {
  u64 prime;
  int exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization, ascending by prime. Trial division up to 2^20,
/// Pollard rho for whatever cofactor remains.
inline std::vector<PrimePower> factorize(u64 n) {
  if (n == 0) throw HypothesisError("factorize(0)");
  std::vector<u64> primes;
  constexpr u64 kTrialLimit = u64{1} << 20;
  for (u64 p = 2; p <= kTrialLimit && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      primes.push_back(p);
      n /= p;
    }
  }
  detail::split(n, primes);
  std::sort(primes.begin(), primes.end());
  std::vector<PrimePower> out;
  for (u64 p : primes) {
    if (!out.empty() && out.back().prime == p) ++out.back().exponent;
    else out.push_back({p, 1});
  }
  return out;
}

/// lcm that throws instead of wrapping.
inline u64 checked_lcm(u64 a, u64 b) {
  const u64 g = std::gcd(a, b);
  const u128 v = static_cast<u128>(a / g) * b;
  if (v >> 64) throw CapExceeded("lcm overflows 64 bits");
  return static_cast<u64>(v);
}

inline u64 checked_mul(u64 a, u64 b) {
  const u128 v = static_cast<u128>(a) * b;
  if (v >> 64) throw CapExceeded("product overflows 64 bits");
  return static_cast<u64>(v);
}

/// Inverse of a modulo m; requires gcd(a, m) == 1.
inline u64 inverse_mod(u64 a, u64 m) {
  if (m == 1) return 0;
  __int128 old_r = static_cast<__int128>(a % m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw HypothesisError("no modular inverse: arguments not coprime");
  __int128 v = old_s % static_cast<__int128>(m);
  if (v < 0) v += m;
  return static_cast<u64>(v);
}

}  // namespace sparsemul::nt
