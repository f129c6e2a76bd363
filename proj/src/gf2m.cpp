#include "ptlab/gf2m.hpp"

#include <bit>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <mutex>
#include <unordered_map>

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace ptlab {

namespace {

using u128 = unsigned __int128;

u128 clmul_soft(Word a, Word b) {
  u128 r = 0;
  u128 x = a;
  while (b) {
    if (b & 1) r ^= x;
    x <<= 1;
    b >>= 1;
  }
  return r;
}

#if defined(__x86_64__)
__attribute__((target("pclmul,sse2"))) u128 clmul_hw(Word a, Word b) {
  const __m128i r = _mm_clmulepi64_si128(_mm_cvtsi64_si128(static_cast<long long>(a)),
                                         _mm_cvtsi64_si128(static_cast<long long>(b)), 0);
  const Word lo = static_cast<Word>(_mm_cvtsi128_si64(r));
  const Word hi = static_cast<Word>(_mm_cvtsi128_si64(_mm_unpackhi_epi64(r, r)));
  return (static_cast<u128>(hi) << 64) | lo;
}

const bool kHavePclmul = __builtin_cpu_supports("pclmul");

inline u128 clmul(Word a, Word b) { return kHavePclmul ? clmul_hw(a, b) : clmul_soft(a, b); }
#else
inline u128 clmul(Word a, Word b) { return clmul_soft(a, b); }
#endif

inline int bit_length(u128 p) {
  const Word hi = static_cast<Word>(p >> 64);
  if (hi) return 128 - std::countl_zero(hi);
  return 64 - std::countl_zero(static_cast<Word>(p));
}

inline Word reduce(u128 p, Word modulus, int n) {
  for (int top = bit_length(p) - 1; top >= n; top = bit_length(p) - 1) {
    p ^= static_cast<u128>(modulus) << (top - n);
  }
  return static_cast<Word>(p);
}

inline Word mulmod(Word a, Word b, Word modulus, int n) { return reduce(clmul(a, b), modulus, n); }

Word powmod(Word a, Word e, Word modulus, int n) {
  Word r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, modulus, n);
    a = mulmod(a, a, modulus, n);
    e >>= 1;
  }
  return r;
}

std::vector<Word> distinct_prime_factors(Word v) {
  std::vector<Word> primes;
  for (Word p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
    if (v % p == 0) {
      primes.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) primes.push_back(v);
  return primes;
}

int field_degree(Word modulus) { return gf2x::degree(modulus); }

void same_field(Elem a, Elem b) {
  if (a.field != b.field || a.field == 0) throw FieldMismatch("elements belong to different fields");
}

}  // namespace

// ---------------------------------------------------------------- gf2x

namespace gf2x {

int degree(Word f) { return f ? 63 - std::countl_zero(f) : -1; }

Word mod(Word a, Word m) {
  const int dm = degree(m);
  if (dm < 0) throw std::domain_error("gf2x::mod by zero");
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= m << (da - dm);
  return a;
}

Word mulmod(Word a, Word b, Word m) {
  const int dm = degree(m);
  return reduce(clmul(mod(a, m), mod(b, m)), m, dm);
}

Word gcd(Word a, Word b) {
  while (b) {
    a = mod(a, b);
    std::swap(a, b);
  }
  return a;
}

bool is_irreducible(Word f) {
  const int n = degree(f);
  if (n < 1) return false;
  // Ben-Or: no factor of degree k <= n/2 iff gcd(f, X^(2^k) - X) = 1 for each k.
  const Word x = mod(2, f);
  Word cur = x;
  for (int k = 1; k <= n / 2; ++k) {
    cur = mulmod(cur, cur, f);
    if (gcd(f, cur ^ x) != 1) return false;
  }
  return true;
}

}  // namespace gf2x

// ---------------------------------------------------------------- Elem ops

Elem operator+(Elem a, Elem b) {
  same_field(a, b);
  return {a.bits ^ b.bits, a.field};
}

Elem operator-(Elem a, Elem b) { return a + b; }

Elem operator*(Elem a, Elem b) {
  same_field(a, b);
  return {mulmod(a.bits, b.bits, a.field, field_degree(a.field)), a.field};
}

Elem& operator+=(Elem& a, Elem b) { return a = a + b; }
Elem& operator*=(Elem& a, Elem b) { return a = a * b; }

Elem pow(Elem a, Word e) {
  if (a.field == 0) throw FieldMismatch("element not bound to a field");
  return {powmod(a.bits, e, a.field, field_degree(a.field)), a.field};
}

Elem inv(Elem a) {
  if (a.field == 0) throw FieldMismatch("element not bound to a field");
  if (a.bits == 0) throw std::domain_error("inverse of zero");
  const int n = field_degree(a.field);
  return {powmod(a.bits, (Word{1} << n) - 2, a.field, n), a.field};
}

Elem operator/(Elem a, Elem b) { return a * inv(b); }

std::string to_hex(Elem a) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(a.bits));
  return buf;
}

std::ostream& operator<<(std::ostream& os, Elem a) { return os << "0x" << to_hex(a); }

// ---------------------------------------------------------------- FieldCtx

FieldCtx::FieldCtx(int n, Word modulus) : n_(n), modulus_(modulus) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("field degree out of range [1, 40]");
  if (gf2x::degree(modulus) != n) throw std::invalid_argument("modulus degree differs from n");
  if (!gf2x::is_irreducible(modulus)) throw std::invalid_argument("modulus is reducible");

  // Factorization and generator depend only on the modulus; computed once.
  static std::mutex cache_mutex;
  static std::unordered_map<Word, std::shared_ptr<const Shared>> cache;
  std::lock_guard lock(cache_mutex);
  if (auto it = cache.find(modulus); it != cache.end()) {
    shared_ = it->second;
    return;
  }

  auto shared = std::make_shared<Shared>();
  const Word order = group_order();
  shared->primes = distinct_prime_factors(order);
  if (order > 1) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ modulus);
    for (;;) {
      const Word g = rng() & (size() - 1);
      if (g == 0) continue;
      bool primitive = true;
      for (Word p : shared->primes) {
        if (powmod(g, order / p, modulus_, n_) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        shared->generator = g;
        break;
      }
    }
  }
  shared_ = shared;
  cache.emplace(modulus, std::move(shared));
}

Elem FieldCtx::elem(Word bits) const {
  if (bits >= size()) throw std::invalid_argument("element bit pattern exceeds field degree");
  return {bits, modulus_};
}

Elem FieldCtx::x() const { return {gf2x::mod(2, modulus_), modulus_}; }

void FieldCtx::check(Elem a) const {
  if (a.field != modulus_) throw FieldMismatch("element does not belong to this field");
}

Word FieldCtx::mul_raw(Word a, Word b) const { return mulmod(a, b, modulus_, n_); }

Word FieldCtx::pow_raw(Word a, Word e) const { return powmod(a, e, modulus_, n_); }

Word FieldCtx::inv_raw(Word a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return powmod(a, group_order() - 1, modulus_, n_);
}

// ---------------------------------------------------------------- ModulusTable

ModulusTable ModulusTable::parse(std::istream& in) {
  ModulusTable table = builtin();
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    int n = 0;
    std::string hex;
    if (!(ls >> n >> hex)) {
      throw std::invalid_argument("modulus table line " + std::to_string(lineno) + ": expected 'n hex'");
    }
    const Word m = std::stoull(hex, nullptr, 16);
    if (n < 1 || n > kMaxDegree || gf2x::degree(m) != n || !gf2x::is_irreducible(m)) {
      throw std::invalid_argument("modulus table line " + std::to_string(lineno) +
                                  ": not an irreducible polynomial of degree n");
    }
    table.entries_[n] = m;
  }
  return table;
}

ModulusTable ModulusTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open modulus table: " + path);
  return parse(in);
}

ModulusTable ModulusTable::from_env() {
  if (const char* path = std::getenv("PTLAB_MODULUS_TABLE"); path && *path) return load(path);
  return builtin();
}

Word ModulusTable::modulus(int n) const {
  auto it = entries_.find(n);
  if (it == entries_.end()) throw std::invalid_argument("field degree out of range [1, 40]");
  return it->second;
}

void ModulusTable::write(std::ostream& out) const {
  for (const auto& [n, m] : entries_) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(m));
    out << n << ' ' << buf << '\n';
  }
}

namespace {

std::mutex g_table_mutex;
std::shared_ptr<const ModulusTable> g_table;

}  // namespace

void set_default_modulus_table(ModulusTable table) {
  auto p = std::make_shared<const ModulusTable>(std::move(table));
  std::lock_guard lock(g_table_mutex);
  g_table = std::move(p);
}

FieldCtx new_field(int n) {
  std::shared_ptr<const ModulusTable> t;
  {
    std::lock_guard lock(g_table_mutex);
    t = g_table;
  }
  return new_field(n, t ? *t : ModulusTable::builtin());
}

FieldCtx new_field(int n, const ModulusTable& table) {
  if (n < 1 || n > kMaxDegree) throw std::invalid_argument("field degree out of range [1, 40]");
  return FieldCtx(n, table.modulus(n));
}

// ---------------------------------------------------------------- field ops

Elem add(const FieldCtx& ctx, Elem a, Elem b) {
  ctx.check(a);
  ctx.check(b);
  return {a.bits ^ b.bits, ctx.modulus()};
}

Elem mul(const FieldCtx& ctx, Elem a, Elem b) {
  ctx.check(a);
  ctx.check(b);
  return {ctx.mul_raw(a.bits, b.bits), ctx.modulus()};
}

Elem inv(const FieldCtx& ctx, Elem a) {
  ctx.check(a);
  return {ctx.inv_raw(a.bits), ctx.modulus()};
}

Elem pow(const FieldCtx& ctx, Elem a, Word e) {
  ctx.check(a);
  return {ctx.pow_raw(a.bits, e), ctx.modulus()};
}

Elem frobenius(const FieldCtx& ctx, Elem a, Word k) {
  ctx.check(a);
  Word v = a.bits;
  for (Word i = 0, steps = k % static_cast<Word>(ctx.degree()); i < steps; ++i) v = ctx.sqr_raw(v);
  return {v, ctx.modulus()};
}

Elem trace_rel(const FieldCtx& ctx, Elem a, Word sub, Word top) {
  ctx.check(a);
  if (sub == 0 || top == 0 || top % sub != 0) {
    throw std::invalid_argument("trace_rel: sub must divide top");
  }
  if (frobenius(ctx, a, top) != a) {
    throw std::invalid_argument("trace_rel: element does not lie in GF(2^gcd(n, top))");
  }
  const Word n = static_cast<Word>(ctx.degree());
  Word acc = 0;
  for (Word i = 0; i < top / sub; ++i) acc ^= frobenius(ctx, a, (sub * i) % n).bits;
  return {acc, ctx.modulus()};
}

Word mult_order(const FieldCtx& ctx, Elem a) {
  ctx.check(a);
  if (a.is_zero()) throw std::domain_error("mult_order of zero");
  Word order = ctx.group_order();
  for (Word p : ctx.group_order_primes()) {
    while (order % p == 0 && ctx.pow_raw(a.bits, order / p) == 1) order /= p;
  }
  return order;
}

bool is_in_subfield(const FieldCtx& ctx, Elem a, int k) {
  ctx.check(a);
  if (k < 1 || ctx.degree() % k != 0) throw std::invalid_argument("is_in_subfield: k must divide n");
  return frobenius(ctx, a, static_cast<Word>(k)) == a;
}

}  // namespace ptlab
