#include "ptlab/qm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ptlab/parallel.hpp"

namespace ptlab {

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

std::uint64_t mod_norm(i128 a, std::uint64_t n) {
  i128 r = a % static_cast<i128>(n);
  if (r < 0) r += n;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % n);
}

// x = c (mod m) with m possibly non-coprime to the other modulus.
struct Residue {
  std::uint64_t c;
  std::uint64_t m;
};

std::optional<Residue> merge(Residue a, Residue b) {
  const std::uint64_t g = std::gcd(a.m, b.m);
  const i128 diff = static_cast<i128>(b.c) - static_cast<i128>(a.c);
  if (diff % static_cast<i128>(g) != 0) return std::nullopt;
  const std::uint64_t mg = b.m / g;
  const std::uint64_t l = a.m / g * b.m;
  std::uint64_t k = 0;
  if (mg > 1) {
    const auto inv = inverse_mod(a.m / g % mg, mg);
    k = mulmod(mod_norm(diff / static_cast<i128>(g), mg), *inv, mg);
  }
  return Residue{mod_norm(static_cast<i128>(a.c) + static_cast<i128>(a.m) * k, l), l};
}

// Solution set of a*d = b (mod n) as one residue class.
std::optional<Residue> linear_class(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  a %= n;
  b %= n;
  const std::uint64_t g = std::gcd(a, n);
  if (b % g != 0) return std::nullopt;
  const std::uint64_t ng = n / g;
  if (ng == 1) return Residue{0, 1};
  const auto inv = inverse_mod(a / g % ng, ng);
  return Residue{mulmod(b / g % ng, *inv, ng), ng};
}

std::vector<Word> sorted_exps(const ExpPoly& p) {
  auto e = p.exponents();
  std::sort(e.begin(), e.end());
  return e;
}

bool maps_exponents(Word d, const std::vector<Word>& ge, const std::vector<Word>& fe, Word n) {
  std::vector<Word> img;
  img.reserve(ge.size());
  for (Word e : ge) img.push_back(mulmod(e, d, n));
  std::sort(img.begin(), img.end());
  return img == fe;
}

void require_same_field(const FieldCtx& ctx, const ExpPoly& f, const ExpPoly& g) {
  if (f.field() != ctx.modulus() || g.field() != ctx.modulus()) {
    throw FieldMismatch("QM comparison across different fields");
  }
}

// Value table of p over every field element, indexed by bit pattern.
std::vector<Word> value_table(const FieldCtx& ctx, const ExpPoly& p) {
  if (ctx.degree() > 24) throw std::invalid_argument("value tables limited to 2^24 elements");
  std::vector<Word> t(ctx.size());
  t[0] = p.zero_value().bits;
  const Word g = ctx.generator().bits;
  std::vector<Word> acc, step;
  for (const auto& term : p.terms()) {
    acc.push_back(term.coeff.bits);
    step.push_back(ctx.pow_raw(g, term.exp));
  }
  Word x = 1;
  for (Word i = 0; i < ctx.group_order(); ++i) {
    Word y = 0;
    for (std::size_t j = 0; j < acc.size(); ++j) {
      y ^= acc[j];
      acc[j] = ctx.mul_raw(acc[j], step[j]);
    }
    t[x] = y;
    x = ctx.mul_raw(x, g);
  }
  return t;
}

}  // namespace

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("modulus must be positive");
  if (n == 1) return 0;
  i128 old_r = a % n, r = n, old_s = 1, s = 0;
  while (r != 0) {
    const i128 qt = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - qt * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - qt * s);
  }
  if (old_r != 1) return std::nullopt;
  return mod_norm(old_s, n);
}

std::int64_t crt_solve(std::span<const Congruence> system) {
  Residue acc{0, 1};
  for (const auto& c : system) {
    if (c.modulus <= 0) throw std::invalid_argument("CRT moduli must be positive");
    const auto m = static_cast<std::uint64_t>(c.modulus);
    if (std::gcd(acc.m, m) != 1) throw std::invalid_argument("CRT moduli are not pairwise coprime");
    acc = *merge(acc, {mod_norm(c.residue, m), m});
  }
  return static_cast<std::int64_t>(acc.c);
}

std::vector<std::uint64_t> solve_linear_congruence(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  std::vector<std::uint64_t> out;
  const auto cls = linear_class(a, b, n);
  if (!cls) return out;
  for (std::uint64_t d = cls->c; d < n; d += cls->m) out.push_back(d);
  return out;
}

bool lemma61_screen(const TrinomialFamily& fam, int m) {
  fam.validate();
  const std::uint64_t q1 = (std::uint64_t{1} << m) + 1;
  std::uint64_t g = std::gcd<std::uint64_t>(fam.alpha, fam.beta);
  g = std::gcd<std::uint64_t>(g, fam.r);
  return std::gcd(g, q1) != 1;
}

std::vector<Word> step1_exponent_match(const ExpPoly& f, const ExpPoly& g) {
  if (f.field() != g.field()) throw FieldMismatch("step 1 across different fields");
  const Word n = f.group_order();
  const auto fe = sorted_exps(f);
  const auto ge = sorted_exps(g);
  std::vector<Word> out;
  if (fe.size() == ge.size() && fe.size() <= 8) {
    std::vector<Word> perm = fe;
    do {
      std::optional<Residue> acc = Residue{0, 1};
      for (std::size_t i = 0; acc && i < ge.size(); ++i) {
        const auto cls = linear_class(ge[i], perm[i], n);
        acc = cls ? merge(*acc, *cls) : std::nullopt;
      }
      if (!acc) continue;
      for (Word d = acc->c; d < n; d += acc->m) {
        if (d != 0 && std::gcd(d, n) == 1) out.push_back(d);
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else if (fe.size() == ge.size()) {
    out = step1_exhaustive_scan(f, g);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (n <= (Word{1} << 16) && fe.size() <= 8 && out != step1_exhaustive_scan(f, g)) {
    throw std::logic_error("step 1 congruence solver disagrees with exhaustive scan");
  }
  return out;
}

std::vector<Word> step1_exhaustive_scan(const ExpPoly& f, const ExpPoly& g, int workers) {
  if (f.field() != g.field()) throw FieldMismatch("step 1 across different fields");
  const Word n = f.group_order();
  const auto fe = sorted_exps(f);
  const auto ge = sorted_exps(g);
  if (fe.size() != ge.size()) return {};
  const int w = std::max(workers, 1);
  std::vector<std::vector<Word>> parts(w);
  parallel_ranges(n, w, [&](Word begin, Word end, int idx) {
    for (Word d = std::max<Word>(begin, 1); d < end; ++d) {
      if (std::gcd(d, n) == 1 && maps_exponents(d, ge, fe, n)) parts[idx].push_back(d);
    }
  });
  std::vector<Word> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::optional<std::pair<Elem, Elem>> step2_coefficient_solve(const FieldCtx& ctx, const ExpPoly& f, const ExpPoly& g,
                                                             Word d) {
  require_same_field(ctx, f, g);
  const Word n = ctx.group_order();
  if (d == 0 || std::gcd(d, n) != 1 || !maps_exponents(d % n, sorted_exps(g), sorted_exps(f), n)) {
    throw std::invalid_argument("d is not a step-1 match");
  }
  if (ctx.degree() > 24) throw std::invalid_argument("step 2 scan limited to 2^24 elements");
  const auto& gt = g.terms();
  if (gt.empty()) {
    if (f.zero_value() == g.zero_value() || !g.zero_value().is_zero()) {
      // both constant zero away from 0; A1 only matters at 0
      for (Word a1 = 1; a1 < ctx.size(); ++a1) {
        if (ctx.mul_raw(a1, g.zero_value().bits) == f.zero_value().bits) return std::pair{ctx.elem(a1), ctx.one()};
      }
    }
    return std::nullopt;
  }
  std::vector<Word> target;
  for (const auto& t : gt) target.push_back(f.coeff_of(mulmod(t.exp, d, n)).bits);
  for (Word a2 = 1; a2 < ctx.size(); ++a2) {
    const Word lead = ctx.mul_raw(gt[0].coeff.bits, ctx.pow_raw(a2, gt[0].exp));
    const Word a1 = ctx.mul_raw(target[0], ctx.inv_raw(lead));
    if (a1 == 0) continue;
    bool ok = ctx.mul_raw(a1, g.zero_value().bits) == f.zero_value().bits;
    for (std::size_t j = 1; ok && j < gt.size(); ++j) {
      ok = ctx.mul_raw(a1, ctx.mul_raw(gt[j].coeff.bits, ctx.pow_raw(a2, gt[j].exp))) == target[j];
    }
    if (ok) return std::pair{ctx.elem(a1), ctx.elem(a2)};
  }
  return std::nullopt;
}

bool verify_witness(const FieldCtx& ctx, const ExpPoly& f, const ExpPoly& g, const QMWitness& w) {
  require_same_field(ctx, f, g);
  ctx.check(w.a1);
  ctx.check(w.a2);
  if (w.a1.is_zero() || w.a2.is_zero() || std::gcd(w.d, ctx.group_order()) != 1) return false;
  const auto ft = value_table(ctx, f);
  const auto gt = value_table(ctx, g);
  for (Word x = 0; x < ctx.size(); ++x) {
    const Word arg = ctx.mul_raw(w.a2.bits, x == 0 ? 0 : ctx.pow_raw(x, w.d));
    if (ft[x] != ctx.mul_raw(w.a1.bits, gt[arg])) return false;
  }
  return true;
}

QMSearch find_qm_witness(const FieldCtx& ctx, const ExpPoly& f, const ExpPoly& g) {
  require_same_field(ctx, f, g);
  QMSearch s;
  s.step1 = step1_exponent_match(f, g);
  for (Word d : s.step1) {
    auto a = step2_coefficient_solve(ctx, f, g, d);
    if (!a) continue;
    QMWitness w{d, a->first, a->second};
    if (!verify_witness(ctx, f, g, w)) {
      throw std::logic_error("coefficient match failed pointwise verification");
    }
    s.witness = w;
    break;
  }
  return s;
}

std::optional<QMWitness> qm_equivalent(const FieldCtx& ctx, const ExpPoly& f, const ExpPoly& g, int workers) {
  require_same_field(ctx, f, g);
  if (!is_permutation_bruteforce(ctx, f, workers)) throw std::invalid_argument("F does not permute the field");
  if (!is_permutation_bruteforce(ctx, g, workers)) throw std::invalid_argument("G does not permute the field");
  return find_qm_witness(ctx, f, g).witness;
}

QMWitness invert_witness(const FieldCtx& ctx, const QMWitness& w) {
  // F(x) = A1 G(A2 x^d)  =>  G(y) = A1^-1 F((A2^-1 y)^e), e = d^-1.
  const auto e = inverse_mod(w.d, ctx.group_order());
  if (!e) throw std::invalid_argument("witness exponent is not a unit");
  const Elem b2 = pow(inv(w.a2), *e);
  return {*e == 0 ? ctx.group_order() : *e, inv(w.a1), b2};
}

std::string_view tag_name(SmallFieldTag t) {
  switch (t) {
    case SmallFieldTag::X: return "X";
    case SmallFieldTag::XCubePlus: return "X(X^2+X+1)";
    case SmallFieldTag::XOverF16: return "X-over-F16";
    case SmallFieldTag::Nontrivial: return "nontrivial";
  }
  return "?";
}

SmallFieldTag lemma42_classify(const TrinomialFamily& fam, int m) {
  fam.validate();
  const long long prod = static_cast<long long>(fam.alpha) * fam.beta * (fam.alpha - fam.beta);
  if (m == 1) return prod % 3 == 0 ? SmallFieldTag::X : SmallFieldTag::XCubePlus;
  if (m == 2) return prod % 5 == 0 ? SmallFieldTag::XOverF16 : SmallFieldTag::Nontrivial;
  throw std::invalid_argument("small-field classification needs m in {1, 2}");
}

std::optional<QMWitness> functional_witness_search(const FieldCtx& ctx, const ExpPoly& f, const ExpPoly& g) {
  require_same_field(ctx, f, g);
  if (ctx.degree() > 16) throw std::invalid_argument("functional search limited to 2^16 elements");
  const Word n = ctx.group_order();
  const auto ft = value_table(ctx, f);
  const auto gt = value_table(ctx, g);
  std::vector<Word> xd(ctx.size());
  for (Word d = 1; d < n || (n == 1 && d == 1); ++d) {
    if (std::gcd(d, n) != 1) continue;
    for (Word x = 0; x < ctx.size(); ++x) xd[x] = x == 0 ? 0 : ctx.pow_raw(x, d);
    for (Word a2 = 1; a2 < ctx.size(); ++a2) {
      const Word g1 = gt[a2];  // G(A2 * 1^d)
      std::vector<Word> a1s;
      if (g1 != 0) {
        a1s.push_back(ctx.mul_raw(ft[1], ctx.inv_raw(g1)));
        if (a1s[0] == 0) continue;
      } else if (ft[1] == 0) {
        for (Word a = 1; a < ctx.size(); ++a) a1s.push_back(a);
      }
      for (Word a1 : a1s) {
        bool ok = true;
        for (Word x = 0; ok && x < ctx.size(); ++x) ok = ft[x] == ctx.mul_raw(a1, gt[ctx.mul_raw(a2, xd[x])]);
        if (ok) return QMWitness{d, ctx.elem(a1), ctx.elem(a2)};
      }
    }
  }
  return std::nullopt;
}

SmallFieldCheck lemma42_cross_check(const TrinomialFamily& fam, int m) {
  const SmallFieldTag tag = lemma42_classify(fam, m);
  const FieldCtx big = new_field(2 * m);
  const ExpPoly f = instantiate(fam, big);
  SmallFieldCheck c{tag, is_permutation_bruteforce(big, f), false, std::nullopt, true};
  c.equivalent_to_x = functional_witness_search(big, f, ExpPoly::identity(big)).has_value();
  if (m == 1) {
    const std::pair<Word, Elem> cubic[] = {{1, big.one()}, {2, big.one()}, {3, big.one()}};
    c.equivalent_to_cubic = functional_witness_search(big, f, ExpPoly::make(big, cubic)).has_value();
  }
  if (c.permutes) {
    if (m == 1) {
      c.consistent = (tag == SmallFieldTag::X) == c.equivalent_to_x &&
                     (tag == SmallFieldTag::XCubePlus) == *c.equivalent_to_cubic;
    } else {
      c.consistent = (tag == SmallFieldTag::XOverF16) == c.equivalent_to_x;
    }
  }
  return c;
}

ExpPoly swapped_partner(const TrinomialFamily& fam, const FieldCtx& big) {
  fam.validate();
  const Word q = Word{1} << (big.degree() / 2);
  const Word n = big.group_order();
  const i128 r2 = 2 * static_cast<i128>(fam.alpha) - fam.r;
  std::vector<std::pair<Word, Elem>> terms;
  for (int k : {fam.alpha, fam.alpha - fam.beta, 0}) {
    Word e = mod_norm(r2 + static_cast<i128>(k) * (q - 1), n);
    if (e == 0) e = n;  // X^(q^2-1) vanishes at 0, unlike a constant
    terms.emplace_back(e, big.one());
  }
  return ExpPoly::make(big, terms);
}

ConjectureWitness conjecture_witness(const TrinomialFamily& fam, int m) {
  fam.validate();
  if (m < 1 || 2 * m > 24) throw std::invalid_argument("conjecture witness needs 1 <= m <= 12");
  const FieldCtx big = new_field(2 * m);
  const ExpPoly f = instantiate(fam, big);
  const ExpPoly g = swapped_partner(fam, big);
  if (!is_permutation_bruteforce(big, f)) throw std::invalid_argument("F" + fam.to_string() + " does not permute");
  if (!is_permutation_bruteforce(big, g)) {
    throw std::invalid_argument("partner of " + fam.to_string() + " does not permute at m=" + std::to_string(m));
  }
  const std::uint64_t q = std::uint64_t{1} << m;
  const std::uint64_t n = q * q - 1;
  const i128 r = fam.r, a = fam.alpha, b = fam.beta, Q = q;

  ConjectureWitness out{};
  for (auto d : solve_linear_congruence(fam.r, mod_norm(a * (Q + 1) - r, n), n)) {
    if (d != 0 && std::gcd(d, n) == 1) out.candidates.push_back(d);
  }
  if (out.candidates.empty()) {
    throw std::runtime_error("no exponent coprime to q^2-1 solves r d = alpha(q+1) - r for " + fam.to_string() +
                             " at m=" + std::to_string(m));
  }
  auto congruent = [&](i128 lhs_coef, i128 rhs, Word d) {
    return mulmod(mod_norm(lhs_coef, n), d, n) == mod_norm(rhs, n);
  };
  const auto gt = value_table(big, g);
  const auto ft = value_table(big, f);
  bool chosen = false;
  for (Word d : out.candidates) {
    const bool c1 = congruent(r + a * (Q - 1), 2 * a - r, d);
    const bool c2 = congruent(r + b * (Q - 1), 2 * a - r + (a - b) * (Q - 1), d);
    const bool c3 = congruent(r, 2 * a - r + a * (Q - 1), d);
    bool pointwise = true;
    for (Word x = 0; pointwise && x < big.size(); ++x) {
      pointwise = gt[x] == ft[x == 0 ? 0 : big.pow_raw(x, d)];
    }
    if (!chosen || (c1 && c2 && c3 && pointwise && !(out.congruences_hold && out.pointwise))) {
      out.witness = {d, big.one(), big.one()};
      out.congruences_hold = c1 && c2 && c3;
      out.literal_second_congruence = congruent(r + b * (Q - 1), a - r + (a - b) * (Q - 1), d);
      out.pointwise = pointwise;
      chosen = true;
    }
  }
  const auto rinv = inverse_mod(fam.r, q - 1);
  if (rinv) {
    const i128 cf = -static_cast<i128>(q) * q + static_cast<i128>(q / 2) * a * *rinv % n * ((Q + 1) * (Q + 1) % n);
    out.closed_form = mod_norm(cf, n);
    out.closed_form_agrees = *out.closed_form == out.witness.d;
  }
  return out;
}

namespace {

bool is_prime_power(std::uint64_t q, std::uint64_t& p) {
  if (q < 2) return false;
  p = q;
  for (std::uint64_t f = 2; f * f <= q; ++f) {
    if (q % f == 0) {
      p = f;
      break;
    }
  }
  while (q % p == 0) q /= p;
  return q == 1;
}

}  // namespace

CongruenceAudit integer_congruence_audit(std::uint64_t r, std::uint64_t alpha, std::uint64_t beta, std::uint64_t q) {
  std::uint64_t p = 0;
  if (!is_prime_power(q, p)) throw std::invalid_argument("q must be a prime power");
  if (q > (std::uint64_t{1} << 31)) throw std::invalid_argument("q too large for 64-bit congruence arithmetic");
  if (alpha <= beta || beta < 1 || r < 1) throw std::invalid_argument("need alpha > beta >= 1 and r >= 1");
  if (std::gcd(r, q - 1) != 1) throw std::invalid_argument("need gcd(r, q-1) = 1");
  const std::uint64_t n = q * q - 1;
  const i128 R = r, A = alpha, B = beta, Q = q;

  CongruenceAudit out{};
  out.q = q;
  out.even = p == 2;
  const std::uint64_t l1 = std::gcd(alpha, q + 1), l2 = std::gcd(beta, q + 1), l3 = std::gcd(r, q + 1);
  if (l1 == 1 || l2 == 1 || l3 == 1) {
    out.branch = "case1";
  } else if (std::gcd(std::gcd(l1, l2), l3) == 1) {
    out.branch = "case2a";
  } else {
    out.branch = "lemma61";
  }

  for (i128 v : {2 * A * B - A * R, A * A + B * B - A * B, A * A - B * B, B * B - 2 * A * B}) {
    out.discard_premise_violations.push_back(v % static_cast<i128>(q + 1) == 0);
  }
  if (out.branch == "lemma61") return out;

  // Both branches reduce to d = -1 (mod q+1-ish) and d = alpha(q+1) r^-1 - 1
  // on the q-1 side; rebuild d by the CRT the way each branch does.
  std::optional<Residue> d;
  if (out.even) {
    const auto rinv = *inverse_mod(r, q - 1);
    const std::uint64_t side = mod_norm(A * (Q + 1) % static_cast<i128>(q - 1) * rinv - 1, q - 1);
    std::optional<Residue> acc = Residue{side, q - 1};
    const std::uint64_t lam[] = {l1, l2, l3};
    for (std::uint64_t l : lam) {
      if (out.branch == "case1" && l != 1) continue;
      acc = merge(*acc, {mod_norm(-1, (q + 1) / l), (q + 1) / l});
      if (!acc) break;
    }
    d = acc;
    const i128 cf = -Q * Q + static_cast<i128>(q / 2) * A % static_cast<i128>(n) * rinv % static_cast<i128>(n) *
                                 ((Q + 1) * (Q + 1) % static_cast<i128>(n));
    if (d && d->m == n) out.closed_form_agrees = mod_norm(cf, n) == d->c;
  } else {
    std::uint64_t two_n = 1;
    while ((q + 1) % (two_n * 2) == 0) two_n *= 2;
    const std::uint64_t big_mod = two_n * (q - 1);
    const auto s = *inverse_mod(r, big_mod);
    const std::uint64_t target = mod_norm(A * (Q + 1) % static_cast<i128>(n) * s - 1, n);
    std::optional<Residue> acc = Residue{target % ((q - 1) / 2), (q - 1) / 2};
    const std::uint64_t lam[] = {l1, l2, l3};
    for (std::uint64_t l : lam) {
      if (!acc) break;
      if (out.branch == "case1" && l != 1) continue;
      const std::uint64_t mod = (q + 1) / std::lcm<std::uint64_t>(2, l);
      acc = merge(*acc, {mod_norm(-1, mod), mod});
    }
    if (acc) acc = merge(*acc, {target % big_mod, big_mod});
    d = acc;
  }
  if (!d || d->m != n) {
    out.branch += "-underdetermined";
    return out;
  }
  const std::uint64_t dv = d->c;
  out.d = dv;
  out.coprime = std::gcd(dv, n) == 1;
  auto congruent = [&](i128 coef, i128 rhs) { return mulmod(mod_norm(coef, n), dv, n) == mod_norm(rhs, n); };
  out.first = congruent(R + A * (Q - 1), 2 * A - R);
  out.second = congruent(R + B * (Q - 1), 2 * A - R + (A - B) * (Q - 1));
  out.third = congruent(R, 2 * A - R + A * (Q - 1));
  out.literal_second = congruent(R + B * (Q - 1), A - R + (A - B) * (Q - 1));

  // The five other pairings of {r, r+alpha(q-1), r+beta(q-1)} * d with the
  // partner's exponents.
  if (n <= (std::uint64_t{1} << 24)) {
    const std::uint64_t src[] = {mod_norm(R + A * (Q - 1), n), mod_norm(R + B * (Q - 1), n), mod_norm(R, n)};
    std::uint64_t dst[] = {mod_norm(2 * A - R, n), mod_norm(2 * A - R + (A - B) * (Q - 1), n),
                           mod_norm(2 * A - R + A * (Q - 1), n)};
    const std::uint64_t selected[] = {dst[0], dst[1], dst[2]};
    std::sort(std::begin(dst), std::end(dst));
    do {
      if (std::equal(std::begin(dst), std::end(dst), std::begin(selected))) continue;
      std::optional<Residue> acc = Residue{0, 1};
      for (int i = 0; acc && i < 3; ++i) {
        const auto cls = linear_class(src[i], dst[i], n);
        acc = cls ? merge(*acc, *cls) : std::nullopt;
      }
      if (!acc) continue;
      for (std::uint64_t x = acc->c; x < n; x += acc->m) {
        if (x != 0 && std::gcd(x, n) == 1) {
          ++out.other_matching_cases;
          break;
        }
      }
    } while (std::next_permutation(std::begin(dst), std::end(dst)));
  }
  return out;
}

}  // namespace ptlab
