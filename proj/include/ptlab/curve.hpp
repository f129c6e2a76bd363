#pragma once

// The plane curve H(X, Y) = 0 over GF(q), q = 2^m, whose rational points with
// Y != 0 witness that X^9 (X^(7(q-1)) + X^(3(q-1)) + 1) does not permute GF(q^2).

#include <cstdint>
#include <string_view>
#include <vector>

#include "ptlab/circle.hpp"
#include "ptlab/poly.hpp"

namespace ptlab {

// X^16 + A X^8 + (B+1) X^4 + A X^2 + B X + A with
// A = Y^8+Y^4+Y^3+Y^2+Y and B = Y^8+Y^7+Y^4+Y^2.
BiPoly build_H(const FieldCtx& ctx);
// (X^8+X^4+X^2+X+1)(X^8+Y^8+X^4+Y^4+X^2+Y^2+X+Y+1).
BiPoly build_D(const FieldCtx& ctx);

struct IdentityCheck {
  int samples_requested = 0;
  int compared = 0;   // pairs where every denominator is nonzero
  int skipped = 0;
  int mismatches = 0;
  bool ok() const { return mismatches == 0 && compared > 0; }
};
// Compares phi^-1(G(phi(x+y))) + phi^-1(G(phi(x))) with y H(x,y) / D(x,y) for
// random (x, y) in GF(q)^2, G(X) = (X^9+X^6+X^2)/(X^7+X^3+1). m odd, m <= 9.
IdentityCheck difference_identity_check(int m, int samples, std::uint64_t seed);

enum class CurveVerdict { NotAPermutation, Inconclusive };
std::string_view verdict_name(CurveVerdict v);

struct CurveReport {
  int m = 0;
  std::uint64_t affine = 0;
  std::uint64_t affine_y_nonzero = 0;
  std::uint64_t infinity = 0;
  std::uint64_t projective = 0;
  int degree = 0;
  std::int64_t bound_lo = 0;  // q + 1 - (d-1)(d-2) floor(sqrt q)
  std::int64_t bound_hi = 0;
  CurveVerdict verdict = CurveVerdict::Inconclusive;
};

// Affine points counted per y as deg gcd(X^q - X, p(X, y)); ctx = GF(2^m), m <= 20.
CurveReport count_points(const FieldCtx& ctx, const BiPoly& p, int workers = 1);
// count_points for H over GF(2^m), with the verdict filled in.
CurveReport count_H(int m, int workers = 1);
// Double loop over GF(q)^2; the oracle for count_points.
std::uint64_t count_affine_naive(const FieldCtx& ctx, const BiPoly& p);

std::uint64_t isqrt(std::uint64_t v);

struct BoundAudit {
  int m = 0;
  // 2^m - 2^(8+m/2) - 1, i.e. q + 1 - 2^8 sqrt(q) - 2, with sqrt(q) floored for odd m.
  std::int64_t value_floor = 0;
  // Same expression with the real square root, rounded down (equal for even m).
  std::int64_t value_real = 0;
  // q + 1 - 210 floor(sqrt q) - 2: the affine lower bound for degree 16 less
  // the two points at infinity.
  std::int64_t affine_lower = 0;
  // Smallest m where value_floor exceeds 2 (the number of roots of H(X, 0)),
  // over all m and over even m only.
  int first_m_floor = 0;
  int first_m_even = 0;
};
BoundAudit bound_audit(int m);

}  // namespace ptlab
