#include "ptlab/perm.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ptlab/parallel.hpp"

namespace ptlab {

namespace {

Word mulmod_word(Word a, Word b, Word n) {
  return static_cast<Word>(static_cast<unsigned __int128>(a) * b % n);
}

}  // namespace

ExpPoly ExpPoly::make(const FieldCtx& ctx, std::span<const std::pair<Word, Elem>> terms) {
  ExpPoly p;
  p.field_ = ctx.modulus();
  p.order_ = ctx.group_order();
  p.zero_value_ = ctx.zero();
  std::map<Word, Elem> merged;
  for (const auto& [e, c] : terms) {
    ctx.check(c);
    if (e == 0) p.zero_value_ += c;
    auto [it, fresh] = merged.try_emplace(e % p.order_, c);
    if (!fresh) it->second += c;
  }
  for (const auto& [e, c] : merged) {
    if (!c.is_zero()) p.terms_.push_back({e, c});
  }
  return p;
}

ExpPoly ExpPoly::from_circle_form(const FieldCtx& ctx, Word r, std::span<const int> h_exponents) {
  if (ctx.degree() % 2 != 0) throw std::invalid_argument("circle form needs GF(q^2)");
  const Word q = Word{1} << (ctx.degree() / 2);
  std::vector<std::pair<Word, Elem>> terms;
  for (int k : h_exponents) {
    if (k < 0) throw std::invalid_argument("negative exponent in h");
    terms.emplace_back(r + static_cast<Word>(k) * (q - 1), ctx.one());
  }
  return make(ctx, terms);
}

ExpPoly ExpPoly::identity(const FieldCtx& ctx) {
  const std::pair<Word, Elem> t{1, ctx.one()};
  return make(ctx, std::span(&t, 1));
}

std::vector<Word> ExpPoly::exponents() const {
  std::vector<Word> out;
  for (const auto& t : terms_) out.push_back(t.exp);
  return out;
}

Elem ExpPoly::coeff_of(Word e) const {
  e %= order_;
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const ExpTerm& t, Word v) { return t.exp < v; });
  if (it != terms_.end() && it->exp == e) return it->coeff;
  return {0, field_};
}

Elem ExpPoly::operator()(Elem x) const {
  if (x.field != field_) throw FieldMismatch("ExpPoly evaluated at an element of another field");
  if (x.is_zero()) return zero_value_;
  Elem acc{0, field_};
  for (const auto& t : terms_) acc += t.coeff * pow(x, t.exp);
  return acc;
}

std::string ExpPoly::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    if (t.coeff.bits != 1) os << to_hex(t.coeff) << "*";
    os << "X^" << t.exp;
  }
  if (first) os << "0";
  return os.str();
}

bool is_permutation_bruteforce(const FieldCtx& ctx, const ExpPoly& f, int workers) {
  if (ctx.degree() > 24) throw std::invalid_argument("brute-force permutation test limited to fields of at most 2^24 elements");
  if (f.field() != ctx.modulus()) throw FieldMismatch("ExpPoly belongs to another field");

  const Word size = ctx.size();
  const Word order = ctx.group_order();
  const Word g = ctx.generator().bits;
  const auto& terms = f.terms();
  std::vector<Word> steps;
  for (const auto& t : terms) steps.push_back(ctx.pow_raw(g, t.exp));

  const std::size_t words = std::max<Word>(size / 64, 1);
  std::vector<std::vector<std::uint64_t>> maps;
  std::atomic<bool> collision{false};
  const int w = static_cast<int>(std::clamp<Word>(workers < 1 ? 1 : workers, 1, order));
  maps.assign(w, {});

  parallel_ranges(order, w, [&](Word begin, Word end, int idx) {
    auto& bits = maps[idx];
    bits.assign(words, 0);
    std::vector<Word> acc(terms.size());
    for (std::size_t j = 0; j < terms.size(); ++j) {
      acc[j] = ctx.mul_raw(terms[j].coeff.bits, ctx.pow_raw(g, mulmod_word(terms[j].exp, begin, order)));
    }
    for (Word i = begin; i < end; ++i) {
      Word y = 0;
      for (std::size_t j = 0; j < acc.size(); ++j) {
        y ^= acc[j];
        acc[j] = ctx.mul_raw(acc[j], steps[j]);
      }
      const std::uint64_t mask = std::uint64_t{1} << (y & 63);
      if (bits[y >> 6] & mask) {
        collision = true;
        return;
      }
      bits[y >> 6] |= mask;
      if (((i - begin) & 0xffff) == 0 && collision) return;
    }
  });
  if (collision) return false;

  std::vector<std::uint64_t> all(words, 0);
  for (const auto& bits : maps) {
    for (std::size_t k = 0; k < words; ++k) all[k] |= bits[k];
  }
  const Word z = f.zero_value().bits;
  all[z >> 6] |= std::uint64_t{1} << (z & 63);
  Word pop = 0;
  for (auto v : all) pop += std::popcount(v);
  return pop == size;
}

std::optional<Elem> circle_image(const CircleCtx& circle, Word r, const UniPoly& h, Elem u) {
  if (!circle.on_circle(u)) throw std::invalid_argument("point is not on the unit circle");
  const Elem hu = h(u);
  if (hu.is_zero()) return std::nullopt;
  return pow(u, r) * pow(hu, circle.q() - 1);
}

std::optional<Word> circle_image_order(const CircleCtx& circle, Word r, const UniPoly& h, Elem u) {
  auto v = circle_image(circle, r, h, u);
  if (!v) return std::nullopt;
  return mult_order(circle.field(), *v);
}

bool is_pp_via_criterion(const CircleCtx& circle, Word r, const UniPoly& h) {
  const FieldCtx& f = circle.field();
  if (h.field() != f.modulus()) throw FieldMismatch("h belongs to another field");
  if (std::gcd(r, circle.q() - 1) != 1) return false;
  std::vector<Word> image;
  image.reserve(circle.q() + 1);
  for (Elem u : enumerate_circle(circle)) {
    const Elem hu = h(u);
    if (hu.is_zero()) return false;
    image.push_back(f.mul_raw(f.pow_raw(u.bits, r), f.pow_raw(hu.bits, circle.q() - 1)));
  }
  std::sort(image.begin(), image.end());
  return std::adjacent_find(image.begin(), image.end()) == image.end();
}

}  // namespace ptlab
