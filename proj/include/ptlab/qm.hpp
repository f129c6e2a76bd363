#pragma once

// Quasi-multiplicative equivalence F(x) = A1 * G(A2 * x^d), gcd(d, q^2-1) = 1,
// together with the congruence arithmetic behind it.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ptlab/family.hpp"
#include "ptlab/perm.hpp"

namespace ptlab {

// ---- integer helpers -------------------------------------------------------

struct Congruence {
  std::int64_t residue;
  std::int64_t modulus;
};

// Unique x mod prod(m_i); throws std::invalid_argument on non-coprime moduli.
std::int64_t crt_solve(std::span<const Congruence> system);

// All d in [0, n) with a*d = b (mod n); there are gcd(a, n) of them or none.
std::vector<std::uint64_t> solve_linear_congruence(std::uint64_t a, std::uint64_t b, std::uint64_t n);

// Inverse of a mod n, or nothing when gcd(a, n) != 1. n = 1 gives 0.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t n);

// ---- equivalence -----------------------------------------------------------

struct QMWitness {
  Word d;
  Elem a1;
  Elem a2;
  friend bool operator==(const QMWitness&, const QMWitness&) = default;
};

// gcd(alpha, beta, r, q+1) != 1, meaning F cannot permute GF(q^2).
bool lemma61_screen(const TrinomialFamily& fam, int m);

// Units d with d * exps(G) = exps(F) as sets mod q^2 - 1, ascending. Solved
// algebraically per exponent bijection; when q^2 - 1 <= 2^16 the result is
// also compared with an exhaustive scan and a mismatch throws std::logic_error.
std::vector<Word> step1_exponent_match(const ExpPoly& f, const ExpPoly& g);
std::vector<Word> step1_exhaustive_scan(const ExpPoly& f, const ExpPoly& g, int workers = 1);

// (A1, A2) with F = A1 G(A2 x^d) coefficient-wise; A2 scanned over GF(q^2)*
// by bit pattern, A1 forced. Throws when d is not a step-1 match.
std::optional<std::pair<Elem, Elem>> step2_coefficient_solve(const FieldCtx& ctx, const ExpPoly& f, const ExpPoly& g,
                                                             Word d);

// F(x) = A1 G(A2 x^d) for every x in the field.
bool verify_witness(const FieldCtx& ctx, const ExpPoly& f, const ExpPoly& g, const QMWitness& w);

struct QMSearch {
  std::vector<Word> step1;              // surviving d
  std::optional<QMWitness> witness;     // first verified witness
};
QMSearch find_qm_witness(const FieldCtx& ctx, const ExpPoly& f, const ExpPoly& g);

// Same, after checking both maps permute the field (std::invalid_argument otherwise).
std::optional<QMWitness> qm_equivalent(const FieldCtx& ctx, const ExpPoly& f, const ExpPoly& g, int workers = 1);

// Witness for G(x) = F(x^d) -> F = G((x)^(d^-1)); returns the inverse witness
// (d', A1', A2') with G = A1' F(A2' x^d').
QMWitness invert_witness(const FieldCtx& ctx, const QMWitness& w);

// ---- small fields ----------------------------------------------------------

enum class SmallFieldTag { X, XCubePlus, XOverF16, Nontrivial };
std::string_view tag_name(SmallFieldTag t);

// m = 1: X when 3 | ab(a-b), else X(X^2+X+1). m = 2: X over GF(16) when
// 5 | ab(a-b), else nontrivial.
SmallFieldTag lemma42_classify(const TrinomialFamily& fam, int m);

struct SmallFieldCheck {
  SmallFieldTag tag;
  bool permutes;                // premise of the classification
  bool equivalent_to_x;         // explicit witness search against G = X
  std::optional<bool> equivalent_to_cubic;  // m = 1 only: against X^3 + X^2 + X
  bool consistent;              // tag matches the search (vacuous when !permutes)
};
SmallFieldCheck lemma42_cross_check(const TrinomialFamily& fam, int m);

// Exhaustive search over units d and A2, with A1 forced by F(1); no
// precondition on either map.
std::optional<QMWitness> functional_witness_search(const FieldCtx& ctx, const ExpPoly& f, const ExpPoly& g);

// ---- exponent-swap equivalence ---------------------------------------------

// G = X^(2 alpha - r) (X^(alpha(q-1)) + X^((alpha-beta)(q-1)) + 1).
ExpPoly swapped_partner(const TrinomialFamily& fam, const FieldCtx& big);

struct ConjectureWitness {
  QMWitness witness;                 // G(x) = F(x^d), so F = G(x^(d^-1))
  std::vector<Word> candidates;      // coprime solutions of r d = alpha(q+1) - r
  bool congruences_hold;             // all three set-equality congruences
  bool literal_second_congruence;    // the variant with alpha - r in place of 2alpha - r
  std::optional<Word> closed_form;   // -q^2 + 2^(m-1) alpha r^-1 (q+1)^2 mod q^2-1
  bool closed_form_agrees;
  bool pointwise;                    // G(x) = F(x^d) on the whole field
};

// Throws std::invalid_argument when F or G fails to permute, and
// std::runtime_error when no coprime d exists (a contradiction to report).
ConjectureWitness conjecture_witness(const TrinomialFamily& fam, int m);

struct CongruenceAudit {
  std::uint64_t q;
  bool even;
  std::string branch;                // "case1", "case2a", "lemma61"
  std::optional<std::uint64_t> d;    // mod q^2 - 1
  bool coprime = false;
  bool first = false, second = false, third = false;  // set-equality form
  bool literal_second = false;
  bool closed_form_agrees = false;   // even q only
  // q+1 divides 2ab - ar, a^2+b^2-ab, a^2-b^2, b^2-2ab respectively.
  std::vector<bool> discard_premise_violations;
  // Bijections other than the selected one that admit a coprime solution.
  int other_matching_cases = 0;
};

// Pure integer derivation of d following the even/odd-q case analysis.
// q must be a prime power; gcd(r, q-1) = 1 is required.
CongruenceAudit integer_congruence_audit(std::uint64_t r, std::uint64_t alpha, std::uint64_t beta, std::uint64_t q);

}  // namespace ptlab
