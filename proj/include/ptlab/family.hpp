#pragma once

// Trinomial families X^r (X^(alpha(q-1)) + X^(beta(q-1)) + 1) over GF(q^2),
// q = 2^m, and the checks built on them.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ptlab/circle.hpp"
#include "ptlab/perm.hpp"
#include "ptlab/poly.hpp"

namespace ptlab {

struct TrinomialFamily {
  int r = 1;
  int alpha = 2;
  int beta = 1;

  // Throws unless alpha > beta >= 1 and r >= 1.
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const TrinomialFamily&, const TrinomialFamily&) = default;
};

inline constexpr TrinomialFamily kF1{11, 10, 4};
inline constexpr TrinomialFamily kF2{9, 8, 6};
inline constexpr TrinomialFamily kF3{7, 7, 5};
inline constexpr TrinomialFamily kNonexist{9, 7, 3};

ExpPoly instantiate(const TrinomialFamily& fam, int m);
ExpPoly instantiate(const TrinomialFamily& fam, const FieldCtx& big);

// h(X) = X^alpha + X^beta + 1.
UniPoly h_poly(const TrinomialFamily& fam, const FieldCtx& ctx);
// X^alpha h(1/X) = X^alpha + X^(alpha-beta) + 1.
UniPoly h_reversed(const TrinomialFamily& fam, const FieldCtx& ctx);

struct RootExclusion {
  bool holds = false;
  // 1: gcd(alpha+beta, q+1) = 1, 2: gcd(|alpha-2beta|, q+1) = 1,
  // 3: gcd(2alpha-beta, q+1) = 1, 4: gcd(3, q+1) = 1; 0 when none fires.
  int condition = 0;
};
RootExclusion no_roots_on_circle(const TrinomialFamily& fam, int m);
// Direct check: neither h nor its reversal vanishes on mu_{q+1}.
bool no_roots_on_circle_exhaustive(const TrinomialFamily& fam, const CircleCtx& circle);

// N(X) D(Y) + N(Y) D(X) where G = X^(r-alpha) h~(X) / h(X) = N / D on the
// circle. Coefficients are 0/1, so the polynomial lives in any field.
BiPoly difference_poly(const TrinomialFamily& fam, const FieldCtx& ctx);
// Same, over GF(2^(2m)), after checking root exclusion (throws if it fails).
BiPoly difference_poly(const TrinomialFamily& fam, int m);

enum class TheoremId { T1, T2, T3, Nonexist };
std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem(std::string_view name);
const TrinomialFamily& theorem_family(TheoremId id);
// The stated condition on m; nothing where the statement is silent.
std::optional<bool> theorem_prediction(TheoremId id, int m);

struct TheoremVerdict {
  TheoremId theorem;
  int m;
  std::optional<bool> predicted;
  bool observed;
  bool agree;  // predicted == observed, or true when nothing is predicted
  double elapsed_ms = 0;
};
TheoremVerdict theorem_verdict(TheoremId id, int m, int workers = 1);

struct TraceRootReport {
  Elem b;
  Elem trace_b;
  Elem trace_b33;
  Word order;
};
struct TraceCertificate {
  int m;
  std::vector<TraceRootReport> roots;
  bool all_zero;
};
// Traces Tr_{2m}^{10m} of b and b^33 for every root b of
// X^10 + X^6 + X^5 + X^3 + X^2 + X + 1 in GF(2^10). Needs gcd(5, m) = 1.
TraceCertificate trace_certificate(int m);

struct FactorCertificate {
  TheoremId theorem;
  int m;
  int work_degree;             // degree of the field the identity was checked in
  std::vector<Elem> roots;     // all roots b of the defining polynomial
  std::optional<Elem> witness; // smallest root making the identity hold
  std::size_t product_terms = 0;
  std::size_t difference_terms = 0;
};
// The stated factor lists, rebuilt from b and compared with difference_poly.
std::vector<BiPoly> certificate_factors(TheoremId id, const FieldCtx& ctx, Elem b);
FactorCertificate factorization_certificate(TheoremId id, int m);

// For m odd, 3 does not divide m: an element a of order 3(q-1) with F_3(a) = 0.
struct ConverseWitness {
  Elem a;
  Word order;
  Elem value;
};
std::optional<ConverseWitness> t3_converse_witness(int m);

}  // namespace ptlab
