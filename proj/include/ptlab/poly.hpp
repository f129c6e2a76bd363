#pragma once

// Univariate and sparse bivariate polynomials over a GF(2^n).

#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "ptlab/gf2m.hpp"

namespace ptlab {

class UniPoly {
 public:
  explicit UniPoly(const FieldCtx& ctx);
  UniPoly(const FieldCtx& ctx, std::vector<Elem> coeffs);

  // Sum of X^e over the listed exponents (coefficients in GF(2)).
  static UniPoly from_exponents(const FieldCtx& ctx, std::initializer_list<int> exponents);
  static UniPoly from_exponents(const FieldCtx& ctx, std::span<const int> exponents);
  static UniPoly monomial(Elem c, int degree);

  Word field() const { return field_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  Elem coeff(int i) const;
  Elem leading() const;

  Elem operator()(Elem x) const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

 private:
  UniPoly(Word field, std::vector<Elem> coeffs);
  void trim();

  Word field_;
  std::vector<Elem> coeffs_;

  friend class BiPoly;
  friend std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  friend UniPoly monic(const UniPoly& a);
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);
UniPoly monic(const UniPoly& a);
UniPoly gcd(const UniPoly& a, const UniPoly& b);
// base^(2^k) mod m by k squarings.
UniPoly pow2k_mod(const UniPoly& base, int k, const UniPoly& m);

// All x in the field with p(x) = 0, ascending by bit pattern. Exhaustive scan
// for fields of at most 2^22 elements, otherwise gcd with X^(2^n) - X followed
// by trace splitting.
std::vector<Elem> roots_in_field(const FieldCtx& ctx, const UniPoly& p);
std::vector<Elem> roots_by_scan(const FieldCtx& ctx, const UniPoly& p);
std::vector<Elem> roots_by_splitting(const FieldCtx& ctx, const UniPoly& p);

// Members of s where p vanishes, in the order of s.
std::vector<Elem> roots_in_set(const FieldCtx& ctx, const UniPoly& p, std::span<const Elem> s);

class BiPoly {
 public:
  using Monomial = std::pair<int, int>;  // (deg_X, deg_Y)
  static constexpr int kMaxVarDegree = 64;

  explicit BiPoly(const FieldCtx& ctx);
  static BiPoly constant(Elem c);
  // Sum of X^i Y^j over the listed monomials (coefficients in GF(2)).
  static BiPoly from_monomials(const FieldCtx& ctx, std::initializer_list<Monomial> monomials);
  static BiPoly from_monomials(const FieldCtx& ctx, std::span<const Monomial> monomials);

  Word field() const { return field_; }
  const std::map<Monomial, Elem>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;
  Elem coeff(int i, int j) const;

  // Adds c * X^i Y^j.
  void add_term(int i, int j, Elem c);

  Elem operator()(Elem x, Elem y) const;
  // p(X, y) as a polynomial in X.
  UniPoly specialize_y(Elem y) const;
  // p(x, Y) as a polynomial in Y.
  UniPoly specialize_x(Elem x) const;
  // p(Y, X).
  BiPoly swapped() const;

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) = default;

 private:
  explicit BiPoly(Word field) : field_(field) {}

  Word field_;
  std::map<Monomial, Elem> terms_;
};

// Product of all factors with like terms combined; the empty product is 1.
BiPoly expand_product(const FieldCtx& ctx, std::span<const BiPoly> factors);

struct ProjPoint {
  Elem x, y, z;
  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
};

// Solutions of h(X, Y, 0) = 0 for the homogenization h of p, normalized so the
// first nonzero coordinate is 1. (0:1:0) comes first, then (1:y:0) by y.
std::vector<ProjPoint> infinity_points(const FieldCtx& ctx, const BiPoly& p);

}  // namespace ptlab
