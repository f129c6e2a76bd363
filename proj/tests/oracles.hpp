#pragma once

// Slow, independent reimplementations used to check the library. Nothing here
// calls into ptlab arithmetic; inputs and outputs are raw bit patterns.

#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline int deg(u64 f) {
  int d = -1;
  while (f >> (d + 1)) ++d;
  return d;
}

// Schoolbook GF(2)[X] remainder.
inline u64 pmod(u64 a, u64 m) {
  const int dm = deg(m);
  for (int d = deg(a); d >= dm; d = deg(a)) a ^= m << (d - dm);
  return a;
}

// Shift-and-add multiplication reduced after every shift.
inline u64 mul(u64 a, u64 b, u64 mod) {
  const int n = deg(mod);
  u64 r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    a <<= 1;
    if ((a >> n) & 1) a ^= mod;
  }
  return r;
}

inline u64 pow(u64 a, u64 e, u64 mod) {
  u64 r = 1;
  for (u64 i = 0; i < e; ++i) r = mul(r, a, mod);
  return r;
}

// Repeated squaring variant for large exponents; still only uses `mul`.
inline u64 pow_fast(u64 a, u64 e, u64 mod) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a, mod);
    a = mul(a, a, mod);
    e >>= 1;
  }
  return r;
}

// Trial division by every polynomial of degree 1..deg(f)/2.
inline bool irreducible(u64 f) {
  const int n = deg(f);
  if (n < 1) return false;
  for (u64 g = 2; deg(g) <= n / 2; ++g) {
    if (pmod(f, g) == 0) return false;
  }
  return true;
}

// First irreducible of degree n in increasing integer order, which is the
// lexicographic order on coefficient strings read from X^n down.
inline u64 smallest_irreducible(int n) {
  for (u64 f = u64{1} << n;; ++f) {
    if (irreducible(f)) return f;
  }
}

// Extended Euclid in GF(2)[X]: a^-1 mod m.
inline u64 inverse(u64 a, u64 m) {
  u64 r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1) {
    u64 q = 0;
    u64 r = r0;
    const int d1 = deg(r1);
    for (int d = deg(r); d >= d1; d = deg(r)) {
      q ^= u64{1} << (d - d1);
      r ^= r1 << (d - d1);
    }
    u64 qs = 0;
    for (int i = 0; i <= deg(q); ++i) {
      if ((q >> i) & 1) qs ^= s1 << i;
    }
    r0 = r1;
    r1 = r;
    const u64 t = s0 ^ qs;
    s0 = s1;
    s1 = t;
  }
  return pmod(s0, m);
}

// Sum of c_i x^(e_i) with repeated squaring via `mul`.
inline u64 eval(const std::vector<std::pair<u64, u64>>& terms, u64 x, u64 mod) {
  u64 acc = 0;
  for (const auto& [e, c] : terms) acc ^= mul(c, pow_fast(x, e, mod), mod);
  return acc;
}

inline bool is_bijection(const std::vector<std::pair<u64, u64>>& terms, u64 mod) {
  const u64 size = u64{1} << deg(mod);
  std::vector<bool> seen(size, false);
  for (u64 x = 0; x < size; ++x) {
    const u64 y = x == 0 ? 0 : eval(terms, x, mod);
    if (seen[y]) return false;
    seen[y] = true;
  }
  return true;
}

struct Mono {
  int i, j;
  u64 c;
};

inline u64 eval2(const std::vector<Mono>& p, u64 x, u64 y, u64 mod) {
  u64 acc = 0;
  for (const auto& t : p) acc ^= mul(t.c, mul(pow(x, t.i, mod), pow(y, t.j, mod), mod), mod);
  return acc;
}

inline u64 count_affine(const std::vector<Mono>& p, u64 mod) {
  const u64 size = u64{1} << deg(mod);
  u64 n = 0;
  for (u64 x = 0; x < size; ++x) {
    for (u64 y = 0; y < size; ++y) n += eval2(p, x, y, mod) == 0;
  }
  return n;
}

// Every unit d mod n with d * g = f as sets of residues.
inline std::vector<u64> exponent_scan(const std::set<u64>& f, const std::set<u64>& g, u64 n) {
  std::vector<u64> out;
  for (u64 d = 1; d < n; ++d) {
    if (std::gcd(d, n) != 1) continue;
    std::set<u64> img;
    for (u64 e : g) img.insert(static_cast<u64>((static_cast<unsigned __int128>(d) * e) % n));
    if (img == f) out.push_back(d);
  }
  return out;
}

}  // namespace oracle
