#include "ptlab/circle.hpp"

#include <stdexcept>

#include "ptlab/poly.hpp"

namespace ptlab {

CircleCtx::CircleCtx(FieldCtx big) : big_(std::move(big)), m_(big_.degree() / 2) {
  if (big_.degree() % 2 != 0) throw std::invalid_argument("circle needs a field of even degree 2m");
  for (Elem w : roots_in_field(big_, UniPoly::from_exponents(big_, {2, 1, 0}))) {
    if (!in_base_field(w)) {
      omega_ = w;
      break;
    }
  }
}

CircleCtx CircleCtx::standard(int m) {
  if (m < 1 || 2 * m > kMaxDegree) throw std::invalid_argument("circle degree m out of range [1, 20]");
  return CircleCtx(new_field(2 * m));
}

bool CircleCtx::on_circle(Elem u) const {
  big_.check(u);
  return big_.pow_raw(u.bits, q() + 1) == 1;
}

bool CircleCtx::in_base_field(Elem x) const {
  big_.check(x);
  return big_.pow_raw(x.bits, q()) == x.bits;
}

Elem CircleCtx::base_generator() const { return pow(big_.generator(), q() + 1); }

std::vector<Elem> enumerate_circle(const CircleCtx& ctx) {
  const FieldCtx& f = ctx.field();
  const Word step = f.pow_raw(f.generator().bits, ctx.q() - 1);
  std::vector<Elem> out;
  out.reserve(ctx.q() + 1);
  Word u = 1;
  for (Word k = 0; k <= ctx.q(); ++k) {
    out.push_back({u, f.modulus()});
    u = f.mul_raw(u, step);
  }
  return out;
}

Elem phi(const CircleCtx& ctx, Elem x) {
  if (!ctx.omega()) throw std::domain_error("phi needs m odd (no cube root of unity outside GF(q))");
  if (!ctx.in_base_field(x)) throw std::invalid_argument("phi argument outside GF(q)");
  const Elem w = *ctx.omega();
  return (x + w * w) / (x + w);
}

Elem phi_inv(const CircleCtx& ctx, Elem u) {
  if (!ctx.omega()) throw std::domain_error("phi_inv needs m odd (no cube root of unity outside GF(q))");
  if (!ctx.on_circle(u)) throw std::invalid_argument("phi_inv argument not on the unit circle");
  const FieldCtx& f = ctx.field();
  if (u == f.one()) throw std::domain_error("phi_inv has a pole at 1");
  const Elem w = *ctx.omega();
  return (w * u + w * w) / (u + f.one());
}

}  // namespace ptlab
