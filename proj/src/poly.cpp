#include "ptlab/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ptlab {

namespace {

void same_field(Word a, Word b) {
  if (a != b) throw FieldMismatch("polynomials over different fields");
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(const FieldCtx& ctx) : field_(ctx.modulus()) {}

UniPoly::UniPoly(const FieldCtx& ctx, std::vector<Elem> coeffs)
    : field_(ctx.modulus()), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_) ctx.check(c);
  trim();
}

UniPoly::UniPoly(Word field, std::vector<Elem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
  trim();
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::from_exponents(const FieldCtx& ctx, std::initializer_list<int> exponents) {
  return from_exponents(ctx, std::span<const int>(exponents.begin(), exponents.size()));
}

UniPoly UniPoly::from_exponents(const FieldCtx& ctx, std::span<const int> exponents) {
  std::vector<Elem> c;
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (static_cast<std::size_t>(e) >= c.size()) c.resize(e + 1, ctx.zero());
    c[e] += ctx.one();
  }
  return UniPoly(ctx.modulus(), std::move(c));
}

UniPoly UniPoly::monomial(Elem c, int degree) {
  std::vector<Elem> v(degree + 1, Elem{0, c.field});
  v[degree] = c;
  return UniPoly(c.field, std::move(v));
}

Elem UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return {0, field_};
  return coeffs_[i];
}

Elem UniPoly::leading() const {
  if (coeffs_.empty()) return {0, field_};
  return coeffs_.back();
}

Elem UniPoly::operator()(Elem x) const {
  if (x.field != field_) throw FieldMismatch("evaluation point from a different field");
  Elem acc{0, field_};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  same_field(a.field_, b.field_);
  std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Elem{0, a.field_});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
  return UniPoly(a.field_, std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  same_field(a.field_, b.field_);
  if (a.is_zero() || b.is_zero()) return UniPoly(a.field_, {});
  std::vector<Elem> c(a.coeffs_.size() + b.coeffs_.size() - 1, Elem{0, a.field_});
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(a.field_, std::move(c));
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  same_field(a.field_, b.field_);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const Word f = a.field_;
  if (a.degree() < b.degree()) return {UniPoly(f, {}), a};
  std::vector<Elem> r = a.coeffs_;
  std::vector<Elem> q(a.degree() - b.degree() + 1, Elem{0, f});
  const Elem lead_inv = inv(b.leading());
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i].is_zero()) continue;
    const Elem t = r[i] * lead_inv;
    q[i - db] = t;
    for (int j = 0; j <= db; ++j) r[i - db + j] += t * b.coeffs_[j];
  }
  return {UniPoly(f, std::move(q)), UniPoly(f, std::move(r))};
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly monic(const UniPoly& a) {
  if (a.is_zero()) return a;
  const Elem li = inv(a.leading());
  std::vector<Elem> c = a.coeffs_;
  for (Elem& e : c) e *= li;
  return UniPoly(a.field_, std::move(c));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

UniPoly pow2k_mod(const UniPoly& base, int k, const UniPoly& m) {
  UniPoly acc = base % m;
  for (int i = 0; i < k; ++i) acc = (acc * acc) % m;
  return acc;
}

// ---------------------------------------------------------------- roots

std::vector<Elem> roots_by_scan(const FieldCtx& ctx, const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  if (p.field() != ctx.modulus()) throw FieldMismatch("polynomial over a different field");
  std::vector<Word> c;
  for (Elem e : p.coeffs()) c.push_back(e.bits);
  std::vector<Elem> roots;
  for (Word x = 0; x < ctx.size(); ++x) {
    Word acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = ctx.mul_raw(acc, x) ^ *it;
    if (acc == 0) roots.push_back({x, ctx.modulus()});
  }
  return roots;
}

namespace {

void split_linear(const FieldCtx& ctx, const UniPoly& g, std::vector<Elem>& out) {
  const int d = g.degree();
  if (d <= 0) return;
  if (d == 1) {
    // monic X + c
    out.push_back(g.coeff(0));
    return;
  }
  const Elem gen = ctx.generator();
  Elem beta = ctx.one();
  for (int j = 0; j < ctx.degree(); ++j, beta *= gen) {
    // Tr(beta X) mod g separates roots whose beta-traces differ.
    UniPoly y = UniPoly::monomial(beta, 1) % g;
    UniPoly t = y;
    for (int i = 1; i < ctx.degree(); ++i) {
      y = (y * y) % g;
      t = t + y;
    }
    UniPoly h = gcd(g, t);
    if (h.degree() > 0 && h.degree() < d) {
      split_linear(ctx, h, out);
      split_linear(ctx, monic(divmod(g, h).first), out);
      return;
    }
  }
  throw std::logic_error("root splitting failed to separate a squarefree split polynomial");
}

}  // namespace

std::vector<Elem> roots_by_splitting(const FieldCtx& ctx, const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  if (p.field() != ctx.modulus()) throw FieldMismatch("polynomial over a different field");
  if (p.degree() == 0) return {};
  const UniPoly m = monic(p);
  const UniPoly x = UniPoly::monomial(ctx.one(), 1);
  const UniPoly frob = pow2k_mod(x, ctx.degree(), m);
  const UniPoly g = gcd(m, frob + x);
  std::vector<Elem> roots;
  split_linear(ctx, g, roots);
  std::sort(roots.begin(), roots.end(), [](Elem a, Elem b) { return a.bits < b.bits; });
  return roots;
}

std::vector<Elem> roots_in_field(const FieldCtx& ctx, const UniPoly& p) {
  if (ctx.degree() <= 22) return roots_by_scan(ctx, p);
  return roots_by_splitting(ctx, p);
}

std::vector<Elem> roots_in_set(const FieldCtx& ctx, const UniPoly& p, std::span<const Elem> s) {
  std::vector<Elem> out;
  for (Elem x : s) {
    ctx.check(x);
    if (p(x).is_zero()) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(const FieldCtx& ctx) : field_(ctx.modulus()) {}

BiPoly BiPoly::constant(Elem c) {
  BiPoly p(c.field);
  p.add_term(0, 0, c);
  return p;
}

BiPoly BiPoly::from_monomials(const FieldCtx& ctx, std::initializer_list<Monomial> monomials) {
  return from_monomials(ctx, std::span<const Monomial>(monomials.begin(), monomials.size()));
}

BiPoly BiPoly::from_monomials(const FieldCtx& ctx, std::span<const Monomial> monomials) {
  BiPoly p(ctx);
  for (auto [i, j] : monomials) p.add_term(i, j, ctx.one());
  return p;
}

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.first + m.second);
  return d;
}

Elem BiPoly::coeff(int i, int j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? Elem{0, field_} : it->second;
}

void BiPoly::add_term(int i, int j, Elem c) {
  if (c.field != field_) throw FieldMismatch("coefficient from a different field");
  if (i < 0 || j < 0 || i > kMaxVarDegree || j > kMaxVarDegree) {
    throw std::invalid_argument("bivariate degree out of range [0, 64]");
  }
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Elem BiPoly::operator()(Elem x, Elem y) const {
  if (x.field != field_ || y.field != field_) throw FieldMismatch("evaluation point from a different field");
  Elem acc{0, field_};
  for (const auto& [m, c] : terms_) acc += c * pow(x, m.first) * pow(y, m.second);
  return acc;
}

UniPoly BiPoly::specialize_y(Elem y) const {
  if (y.field != field_) throw FieldMismatch("evaluation point from a different field");
  std::vector<Elem> c;
  for (const auto& [m, k] : terms_) {
    if (static_cast<std::size_t>(m.first) >= c.size()) c.resize(m.first + 1, Elem{0, field_});
    c[m.first] += k * pow(y, m.second);
  }
  return UniPoly(field_, std::move(c));
}

UniPoly BiPoly::specialize_x(Elem x) const { return swapped().specialize_y(x); }

BiPoly BiPoly::swapped() const {
  BiPoly p = *this;
  p.terms_.clear();
  for (const auto& [m, c] : terms_) p.terms_.emplace(Monomial{m.second, m.first}, c);
  return p;
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
  same_field(a.field_, b.field_);
  BiPoly r = a;
  for (const auto& [m, c] : b.terms_) r.add_term(m.first, m.second, c);
  return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  same_field(a.field_, b.field_);
  BiPoly r = a;
  r.terms_.clear();
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
  }
  return r;
}

BiPoly expand_product(const FieldCtx& ctx, std::span<const BiPoly> factors) {
  BiPoly acc = BiPoly::constant(ctx.one());
  for (const BiPoly& f : factors) {
    if (f.field() != ctx.modulus()) throw FieldMismatch("factor over a different field");
    acc = acc * f;
  }
  return acc;
}

std::vector<ProjPoint> infinity_points(const FieldCtx& ctx, const BiPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("points at infinity of the zero polynomial");
  if (p.field() != ctx.modulus()) throw FieldMismatch("polynomial over a different field");
  const int d = p.total_degree();
  // h(X, Y, 0) is the degree-d homogeneous part.
  std::vector<Elem> at_x1(d + 1, ctx.zero());  // h(1, Y) by power of Y
  for (const auto& [m, c] : p.terms()) {
    if (m.first + m.second == d) at_x1[m.second] += c;
  }
  std::vector<ProjPoint> pts;
  if (at_x1[d].is_zero()) pts.push_back({ctx.zero(), ctx.one(), ctx.zero()});  // h(0, 1) = c_{0,d}
  for (Elem y : roots_in_field(ctx, UniPoly(ctx, at_x1))) pts.push_back({ctx.one(), y, ctx.zero()});
  return pts;
}

}  // namespace ptlab
