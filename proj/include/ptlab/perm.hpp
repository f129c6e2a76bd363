#pragma once

// Sparse "exponent polynomials" sum c_i X^(e_i) evaluated as functions on a
// finite field, and permutation tests for them.

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptlab/circle.hpp"
#include "ptlab/gf2m.hpp"
#include "ptlab/poly.hpp"

namespace ptlab {

struct ExpTerm {
  Word exp;  // reduced into [0, 2^n - 2]
  Elem coeff;
  friend bool operator==(const ExpTerm&, const ExpTerm&) = default;
};

class ExpPoly {
 public:
  // Builds sum c * X^e. Exponents are reduced mod 2^n - 1 and colliding terms
  // are merged by adding coefficients; terms that cancel disappear. The value
  // at 0 is the sum of coefficients whose unreduced exponent is 0.
  static ExpPoly make(const FieldCtx& ctx, std::span<const std::pair<Word, Elem>> terms);
  // X^r h(X^(q-1)) over GF(q^2) with h given by its exponents (all coefficients 1).
  static ExpPoly from_circle_form(const FieldCtx& ctx, Word r, std::span<const int> h_exponents);
  static ExpPoly identity(const FieldCtx& ctx);

  Word field() const { return field_; }
  Word group_order() const { return order_; }
  const std::vector<ExpTerm>& terms() const { return terms_; }
  std::vector<Word> exponents() const;
  Elem zero_value() const { return zero_value_; }
  // Coefficient of X^e (e reduced), zero if absent.
  Elem coeff_of(Word e) const;

  Elem operator()(Elem x) const;

  std::string to_string() const;
  friend bool operator==(const ExpPoly&, const ExpPoly&) = default;

 private:
  Word field_ = 0;
  Word order_ = 0;
  std::vector<ExpTerm> terms_;  // sorted by exponent
  Elem zero_value_{};
};

// Exhaustive bijectivity test by image bitmap; ctx degree must be at most 24.
bool is_permutation_bruteforce(const FieldCtx& ctx, const ExpPoly& f, int workers = 1);

// gcd(r, q-1) = 1 and u -> u^r h(u)^(q-1) permutes mu_{q+1}.
bool is_pp_via_criterion(const CircleCtx& circle, Word r, const UniPoly& h);

// Order of u^r h(u)^(q-1), or nothing when h(u) = 0.
std::optional<Word> circle_image_order(const CircleCtx& circle, Word r, const UniPoly& h, Elem u);

// u^r h(u)^(q-1), or nothing when h(u) = 0.
std::optional<Elem> circle_image(const CircleCtx& circle, Word r, const UniPoly& h, Elem u);

}  // namespace ptlab
