#pragma once

// Brute-force reference routines for the tests. They work on plain 64-bit
// coefficient masks and step x^i one multiplication at a time; nothing here
// calls into the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline int deg(u64 m) { return m ? 63 - __builtin_clzll(m) : -1; }

inline u64 mod(u64 a, u64 m) {
  const int dm = deg(m);
  while (a && deg(a) >= dm) a ^= m << (deg(a) - dm);
  return a;
}

// a * b for deg a + deg b < 64.
inline u64 mul(u64 a, u64 b) {
  u64 r = 0;
  for (int i = 0; b >> i; ++i)
    if ((b >> i) & 1) r ^= a << i;
  return r;
}

inline u64 step(u64 r, u64 m) { return mod(r << 1, m); }

/// Smallest e > 0 with x^e = 1 mod m, by stepping; 0 if none within limit.
inline u64 order(u64 m, u64 limit = u64{1} << 22) {
  u64 r = step(1, m);
  for (u64 e = 1; e <= limit; ++e) {
    if (r == 1) return e;
    r = step(r, m);
  }
  return 0;
}

/// Trial division by every polynomial of degree 1..deg/2.
inline bool irreducible(u64 f) {
  const int d = deg(f);
  if (d < 1) return false;
  for (u64 g = 2; deg(g) <= d / 2; ++g)
    if (mod(f, g) == 0) return false;
  return true;
}

/// x^i mod m for 0 <= i <= n.
inline std::vector<u64> powers(u64 m, u64 n) {
  std::vector<u64> r{mod(1, m)};
  while (r.size() <= n) r.push_back(step(r.back(), m));
  return r;
}

/// Does x^a1 + ... + x^ak + 1 vanish mod m?
inline bool divides(u64 m, const std::vector<u64>& exps) {
  u64 acc = 1;
  for (auto e : exps) {
    u64 r = 1;
    for (u64 i = 0; i < e; ++i) r = step(r, m);
    acc ^= r;
  }
  return acc == 0;
}

/// Every weight-t multiple with exponents in [1, max_exp], as decreasing
/// exponent lists, by testing all (t-1)-subsets.
inline std::vector<std::vector<u64>> multiples(u64 m, int t, u64 max_exp) {
  const auto r = powers(m, max_exp);
  std::vector<std::vector<u64>> out;
  std::vector<u64> cur;
  std::function<void(u64, u64)> rec = [&](u64 below, u64 acc) {
    if (static_cast<int>(cur.size()) == t - 1) {
      if (acc == 1) out.push_back(cur);
      return;
    }
    for (u64 e = below; e-- > 1;) {
      cur.push_back(e);
      rec(e, acc ^ r[e]);
      cur.pop_back();
    }
  };
  rec(max_exp + 1, 0);
  std::sort(out.begin(), out.end());
  return out;
}

inline u64 count_multiples(u64 m, int t, u64 max_exp) { return multiples(m, t, max_exp).size(); }

}  // namespace oracle
