#include "ptlab/family.hpp"

#include <chrono>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace ptlab {

void TrinomialFamily::validate() const {
  if (r < 1 || beta < 1 || alpha <= beta) {
    throw std::invalid_argument("family needs r >= 1 and alpha > beta >= 1, got " + to_string());
  }
}

std::string TrinomialFamily::to_string() const {
  return "(" + std::to_string(r) + "," + std::to_string(alpha) + "," + std::to_string(beta) + ")";
}

ExpPoly instantiate(const TrinomialFamily& fam, const FieldCtx& big) {
  fam.validate();
  const int h[] = {0, fam.beta, fam.alpha};
  return ExpPoly::from_circle_form(big, static_cast<Word>(fam.r), h);
}

ExpPoly instantiate(const TrinomialFamily& fam, int m) { return instantiate(fam, new_field(2 * m)); }

UniPoly h_poly(const TrinomialFamily& fam, const FieldCtx& ctx) {
  fam.validate();
  return UniPoly::from_exponents(ctx, {fam.alpha, fam.beta, 0});
}

UniPoly h_reversed(const TrinomialFamily& fam, const FieldCtx& ctx) {
  fam.validate();
  return UniPoly::from_exponents(ctx, {fam.alpha, fam.alpha - fam.beta, 0});
}

RootExclusion no_roots_on_circle(const TrinomialFamily& fam, int m) {
  fam.validate();
  if (m < 1 || m > 62) throw std::invalid_argument("m out of range");
  const std::uint64_t q1 = (std::uint64_t{1} << m) + 1;
  const std::uint64_t a = fam.alpha, b = fam.beta;
  const std::uint64_t cands[] = {a + b, static_cast<std::uint64_t>(std::llabs(fam.alpha - 2 * static_cast<long long>(fam.beta))),
                                 2 * a - b, 3};
  for (int i = 0; i < 4; ++i) {
    if (std::gcd(cands[i], q1) == 1) return {true, i + 1};
  }
  return {false, 0};
}

bool no_roots_on_circle_exhaustive(const TrinomialFamily& fam, const CircleCtx& circle) {
  const auto pts = enumerate_circle(circle);
  return roots_in_set(circle.field(), h_poly(fam, circle.field()), pts).empty() &&
         roots_in_set(circle.field(), h_reversed(fam, circle.field()), pts).empty();
}

BiPoly difference_poly(const TrinomialFamily& fam, const FieldCtx& ctx) {
  fam.validate();
  const int shift_n = std::max(fam.r - fam.alpha, 0);
  const int shift_d = std::max(fam.alpha - fam.r, 0);
  const std::vector<int> n = {shift_n + fam.alpha, shift_n + fam.alpha - fam.beta, shift_n};
  const std::vector<int> d = {shift_d + fam.alpha, shift_d + fam.beta, shift_d};
  BiPoly f(ctx);
  for (int i : n) {
    for (int j : d) {
      f.add_term(i, j, ctx.one());
      f.add_term(j, i, ctx.one());
    }
  }
  return f;
}

BiPoly difference_poly(const TrinomialFamily& fam, int m) {
  if (!no_roots_on_circle(fam, m).holds) {
    throw std::domain_error("h may vanish on the unit circle for " + fam.to_string() + " at m=" + std::to_string(m));
  }
  return difference_poly(fam, new_field(2 * m));
}

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return "t1";
    case TheoremId::T2: return "t2";
    case TheoremId::T3: return "t3";
    case TheoremId::Nonexist: return "nonexist";
  }
  return "?";
}

std::optional<TheoremId> parse_theorem(std::string_view name) {
  for (auto id : {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::Nonexist}) {
    if (theorem_name(id) == name) return id;
  }
  return std::nullopt;
}

const TrinomialFamily& theorem_family(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return kF1;
    case TheoremId::T2: return kF2;
    case TheoremId::T3: return kF3;
    case TheoremId::Nonexist: return kNonexist;
  }
  throw std::invalid_argument("unknown theorem");
}

std::optional<bool> theorem_prediction(TheoremId id, int m) {
  switch (id) {
    case TheoremId::T1: return m % 5 != 0;
    case TheoremId::T2: return m % 2 == 1;
    case TheoremId::T3: return m % 2 == 0 && m % 3 != 0;
    case TheoremId::Nonexist:
      if (m > 3) return false;
      return std::nullopt;
  }
  return std::nullopt;
}

TheoremVerdict theorem_verdict(TheoremId id, int m, int workers) {
  if (m < 1 || m > 12) throw std::invalid_argument("theorem verdicts need 1 <= m <= 12");
  const auto start = std::chrono::steady_clock::now();
  const FieldCtx big = new_field(2 * m);
  TheoremVerdict v{id, m, theorem_prediction(id, m), false, false};
  v.observed = is_permutation_bruteforce(big, instantiate(theorem_family(id), big), workers);
  v.agree = !v.predicted || *v.predicted == v.observed;
  v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

namespace {

const FieldCtx& gf1024() {
  static const FieldCtx f = new_field(10);
  return f;
}

}  // namespace

TraceCertificate trace_certificate(int m) {
  if (m < 1 || std::gcd(m, 5) != 1) throw std::invalid_argument("trace certificate needs gcd(5, m) = 1");
  const FieldCtx& f = gf1024();
  TraceCertificate cert{m, {}, true};
  for (Elem b : roots_in_field(f, UniPoly::from_exponents(f, {10, 6, 5, 3, 2, 1, 0}))) {
    const Word sub = 2 * static_cast<Word>(m), top = 10 * static_cast<Word>(m);
    TraceRootReport rep{b, trace_rel(f, b, sub, top), trace_rel(f, pow(b, 33), sub, top), mult_order(f, b)};
    cert.all_zero = cert.all_zero && rep.trace_b.is_zero() && rep.trace_b33.is_zero();
    cert.roots.push_back(rep);
  }
  return cert;
}

namespace {

struct CertSpec {
  int k;                       // degree of the defining polynomial of b
  std::vector<int> poly;
};

CertSpec cert_spec(TheoremId id) {
  switch (id) {
    case TheoremId::T1: return {10, {10, 6, 5, 3, 2, 1, 0}};
    case TheoremId::T2: return {4, {4, 3, 0}};
    case TheoremId::T3: return {6, {6, 4, 3, 1, 0}};
    case TheoremId::Nonexist: break;
  }
  throw std::invalid_argument("no factorization certificate for this theorem");
}

BiPoly xy_form(const FieldCtx& f, Elem sq, Elem cross) {
  // X^2Y^2 + sq (X^2 + Y^2) + cross XY + 1
  BiPoly p(f);
  p.add_term(2, 2, f.one());
  p.add_term(2, 0, sq);
  p.add_term(0, 2, sq);
  p.add_term(1, 1, cross);
  p.add_term(0, 0, f.one());
  return p;
}

}  // namespace

std::vector<BiPoly> certificate_factors(TheoremId id, const FieldCtx& f, Elem b) {
  f.check(b);
  std::vector<BiPoly> out;
  out.push_back(BiPoly::from_monomials(f, {{1, 0}, {0, 1}}));
  switch (id) {
    case TheoremId::T1: {
      const Word e[] = {33, 66, 132, 264, 528};
      for (int i = 0; i < 5; ++i) out.push_back(xy_form(f, pow(b, e[i]), pow(b, e[(i + 4) % 5])));
      break;
    }
    case TheoremId::T2:
      for (int i = 1; i <= 4; ++i) {
        out.push_back(xy_form(f, pow(b, Word{1} << (i - 1)), pow(b, Word{1} << (i + 2))));
      }
      break;
    case TheoremId::T3: {
      for (int i = 1; i <= 2; ++i) {
        BiPoly p = BiPoly::from_monomials(f, {{0, 1}});
        p.add_term(0, 0, pow(b, 21 * i));
        out.push_back(p);
      }
      for (int i = 3; i <= 4; ++i) {
        BiPoly p = BiPoly::from_monomials(f, {{1, 0}});
        p.add_term(0, 0, pow(b, 21 * (i - 2)));
        out.push_back(p);
      }
      out.push_back(BiPoly::from_monomials(f, {{2, 1}, {1, 2}, {1, 0}, {0, 1}, {0, 0}}));
      out.push_back(BiPoly::from_monomials(f, {{2, 2}, {2, 1}, {1, 2}, {1, 0}, {0, 1}}));
      break;
    }
    case TheoremId::Nonexist:
      throw std::invalid_argument("no factorization certificate for this theorem");
  }
  return out;
}

FactorCertificate factorization_certificate(TheoremId id, int m) {
  const CertSpec spec = cert_spec(id);
  if (m < 1) throw std::invalid_argument("m must be positive");
  const int l = std::lcm(2 * m, spec.k);
  const int work = l <= kMaxDegree ? l : spec.k;
  const FieldCtx f = new_field(work);
  FactorCertificate cert{id, m, work, {}, std::nullopt};
  const BiPoly target = difference_poly(theorem_family(id), f);
  cert.difference_terms = target.term_count();
  cert.roots = roots_in_field(f, UniPoly::from_exponents(f, spec.poly));
  for (Elem b : cert.roots) {
    const auto factors = certificate_factors(id, f, b);
    const BiPoly prod = expand_product(f, factors);
    if (!cert.witness && prod == target) {
      cert.witness = b;
      cert.product_terms = prod.term_count();
    }
  }
  return cert;
}

std::optional<ConverseWitness> t3_converse_witness(int m) {
  if (m < 1 || m % 2 == 0 || m % 3 == 0 || 2 * m > kMaxDegree) return std::nullopt;
  const FieldCtx big = new_field(2 * m);
  const Word q = Word{1} << m;
  const Elem a = pow(big.generator(), (q + 1) / 3);
  return ConverseWitness{a, mult_order(big, a), instantiate(kF3, big)(a)};
}

}  // namespace ptlab
