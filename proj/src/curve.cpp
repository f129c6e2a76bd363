#include "ptlab/curve.hpp"

#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

#include "ptlab/parallel.hpp"

namespace ptlab {

BiPoly build_H(const FieldCtx& ctx) {
  const BiPoly a = BiPoly::from_monomials(ctx, {{0, 8}, {0, 4}, {0, 3}, {0, 2}, {0, 1}});
  const BiPoly b = BiPoly::from_monomials(ctx, {{0, 8}, {0, 7}, {0, 4}, {0, 2}});
  const BiPoly one = BiPoly::constant(ctx.one());
  auto xp = [&](int k) { return BiPoly::from_monomials(ctx, {{k, 0}}); };
  return xp(16) + a * xp(8) + (b + one) * xp(4) + a * xp(2) + b * xp(1) + a;
}

BiPoly build_D(const FieldCtx& ctx) {
  const BiPoly left = BiPoly::from_monomials(ctx, {{8, 0}, {4, 0}, {2, 0}, {1, 0}, {0, 0}});
  const BiPoly right = BiPoly::from_monomials(
      ctx, {{8, 0}, {0, 8}, {4, 0}, {0, 4}, {2, 0}, {0, 2}, {1, 0}, {0, 1}, {0, 0}});
  return left * right;
}

IdentityCheck difference_identity_check(int m, int samples, std::uint64_t seed) {
  if (m % 2 == 0 || m < 1 || m > 9) throw std::invalid_argument("identity check needs odd m <= 9");
  const CircleCtx circle = CircleCtx::standard(m);
  const FieldCtx& f = circle.field();
  const BiPoly h = build_H(f);
  const BiPoly d = build_D(f);
  const UniPoly num = UniPoly::from_exponents(f, {9, 6, 2});
  const UniPoly den = UniPoly::from_exponents(f, {7, 3, 0});
  const Elem base = circle.base_generator();
  const Word q = circle.q();

  // phi^-1(G(phi(x))), or nothing at a pole.
  auto path = [&](Elem x) -> std::optional<Elem> {
    const Elem u = phi(circle, x);
    const Elem dv = den(u);
    if (dv.is_zero()) return std::nullopt;
    const Elem g = num(u) / dv;
    if (g == f.one()) return std::nullopt;
    return phi_inv(circle, g);
  };

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Word> pick(0, q - 1);
  auto draw = [&] {
    const Word k = pick(rng);
    return k == 0 ? f.zero() : pow(base, k - 1);
  };

  IdentityCheck out;
  out.samples_requested = samples;
  for (int i = 0; i < samples; ++i) {
    const Elem x = draw();
    const Elem y = draw();
    const auto l1 = path(x + y);
    const auto l2 = path(x);
    const Elem dv = d(x, y);
    if (!l1 || !l2 || dv.is_zero()) {
      ++out.skipped;
      continue;
    }
    ++out.compared;
    if (*l1 + *l2 != y * h(x, y) / dv) ++out.mismatches;
  }
  return out;
}

std::string_view verdict_name(CurveVerdict v) {
  return v == CurveVerdict::NotAPermutation ? "not-a-permutation" : "inconclusive";
}

std::uint64_t isqrt(std::uint64_t v) {
  std::uint64_t r = 0;
  for (std::uint64_t bit = std::uint64_t{1} << 31; bit; bit >>= 1) {
    const std::uint64_t t = r | bit;
    if (t * t <= v) r = t;
  }
  return r;
}

namespace {

constexpr int kMaxX = 32;
using Coeffs = std::array<Word, kMaxX + 1>;

// Number of distinct roots in GF(2^m) of the monic polynomial p of degree dg:
// deg gcd(X^(2^m) - X, p).
int root_count(const FieldCtx& f, const Coeffs& p, int dg) {
  if (dg == 0) return 0;
  // r = X mod p, then m squarings
  Coeffs r{};
  if (dg == 1) {
    r[0] = p[0];  // X = -p0 = p0
  } else {
    r[1] = 1;
  }
  std::array<Word, 2 * kMaxX + 1> t{};
  for (int s = 0; s < f.degree(); ++s) {
    t.fill(0);
    for (int i = 0; i < dg; ++i) t[2 * i] = f.sqr_raw(r[i]);
    for (int k = 2 * dg - 2; k >= dg; --k) {
      const Word c = t[k];
      if (!c) continue;
      t[k] = 0;
      for (int j = 0; j < dg; ++j) {
        if (p[j]) t[k - dg + j] ^= f.mul_raw(c, p[j]);
      }
    }
    for (int i = 0; i < dg; ++i) r[i] = t[i];
  }
  // r - X
  std::vector<Elem> rc(dg), pc(dg + 1);
  for (int i = 0; i < dg; ++i) rc[i] = {r[i], f.modulus()};
  if (dg > 1) {
    rc[1] += f.one();
  } else {
    rc.push_back(f.one());  // degree-1 p: X mod p is a constant, so r - X keeps X
  }
  for (int i = 0; i <= dg; ++i) pc[i] = {p[i], f.modulus()};
  return gcd(UniPoly(f, rc), UniPoly(f, pc)).degree();
}

}  // namespace

CurveReport count_points(const FieldCtx& ctx, const BiPoly& p, int workers) {
  if (ctx.degree() > 20) throw std::invalid_argument("point counting limited to q <= 2^20");
  if (p.field() != ctx.modulus()) throw FieldMismatch("curve polynomial belongs to another field");
  if (p.is_zero()) throw std::invalid_argument("zero polynomial");
  int dx = 0, dy = 0;
  for (const auto& [mono, c] : p.terms()) {
    dx = std::max(dx, mono.first);
    dy = std::max(dy, mono.second);
  }
  if (dx > kMaxX) throw std::invalid_argument("X-degree too large for point counting");
  const Word q = ctx.size();

  const int w = std::max(workers, 1);
  std::vector<std::uint64_t> total(w, 0), nonzero(w, 0);
  parallel_ranges(q, w, [&](Word begin, Word end, int idx) {
    std::vector<Word> ypow(dy + 1);
    for (Word y = begin; y < end; ++y) {
      ypow[0] = 1;
      for (int j = 1; j <= dy; ++j) ypow[j] = ctx.mul_raw(ypow[j - 1], y);
      Coeffs c{};
      for (const auto& [mono, coef] : p.terms()) c[mono.first] ^= ctx.mul_raw(coef.bits, ypow[mono.second]);
      int dg = dx;
      while (dg >= 0 && c[dg] == 0) --dg;
      std::uint64_t n;
      if (dg < 0) {
        n = q;
      } else {
        if (c[dg] != 1) {
          const Word li = ctx.inv_raw(c[dg]);
          for (int i = 0; i <= dg; ++i) c[i] = ctx.mul_raw(c[i], li);
        }
        n = static_cast<std::uint64_t>(root_count(ctx, c, dg));
      }
      total[idx] += n;
      if (y != 0) nonzero[idx] += n;
    }
  });

  CurveReport rep;
  rep.m = ctx.degree();
  rep.affine = std::accumulate(total.begin(), total.end(), std::uint64_t{0});
  rep.affine_y_nonzero = std::accumulate(nonzero.begin(), nonzero.end(), std::uint64_t{0});
  rep.infinity = infinity_points(ctx, p).size();
  rep.projective = rep.affine + rep.infinity;
  rep.degree = p.total_degree();
  const std::int64_t spread = static_cast<std::int64_t>(rep.degree - 1) * (rep.degree - 2) *
                              static_cast<std::int64_t>(isqrt(q));
  rep.bound_lo = static_cast<std::int64_t>(q) + 1 - spread;
  rep.bound_hi = static_cast<std::int64_t>(q) + 1 + spread;
  return rep;
}

CurveReport count_H(int m, int workers) {
  if (m < 1 || m > 20) throw std::invalid_argument("curve counting needs 1 <= m <= 20");
  const FieldCtx f = new_field(m);
  CurveReport rep = count_points(f, build_H(f), workers);
  const Word q = f.size();
  if (rep.affine_y_nonzero > 0 && m % 2 == 1 && std::gcd<Word>(9, q - 1) == 1) {
    rep.verdict = CurveVerdict::NotAPermutation;
  }
  return rep;
}

std::uint64_t count_affine_naive(const FieldCtx& ctx, const BiPoly& p) {
  if (ctx.degree() > 12) throw std::invalid_argument("naive count limited to q <= 2^12");
  std::uint64_t n = 0;
  for (Word x = 0; x < ctx.size(); ++x) {
    for (Word y = 0; y < ctx.size(); ++y) {
      if (p(ctx.elem(x), ctx.elem(y)).is_zero()) ++n;
    }
  }
  return n;
}

namespace {

std::int64_t bound_value_floor(int m) {
  const std::int64_t q = std::int64_t{1} << m;
  return q - 256 * static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(q))) - 1;
}

}  // namespace

BoundAudit bound_audit(int m) {
  if (m < 1 || m > 40) throw std::invalid_argument("bound audit needs 1 <= m <= 40");
  BoundAudit a;
  a.m = m;
  const std::int64_t q = std::int64_t{1} << m;
  const std::int64_t root = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(q)));
  a.value_floor = bound_value_floor(m);
  if (m % 2 == 0) {
    a.value_real = a.value_floor;
  } else {
    // 256 sqrt(q) = sqrt(2^(m+16)), irrational for odd m
    a.value_real = q - 1 - (static_cast<std::int64_t>(isqrt(std::uint64_t{1} << (m + 16))) + 1);
  }
  a.affine_lower = q + 1 - 210 * root - 2;
  for (int k = 1; k <= 40; ++k) {
    if (bound_value_floor(k) > 2) {
      if (!a.first_m_floor) a.first_m_floor = k;
      if (!a.first_m_even && k % 2 == 0) a.first_m_even = k;
    }
  }
  return a;
}

}  // namespace ptlab
