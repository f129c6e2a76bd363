#pragma once

// The unit circle mu_{q+1} = { u in GF(q^2) : u^(q+1) = 1 }, q = 2^m, and the
// rational bijection phi(x) = (x + w^2) / (x + w) from GF(q) onto mu_{q+1} \ {1}.

#include <optional>
#include <vector>

#include "ptlab/gf2m.hpp"

namespace ptlab {

class CircleCtx {
 public:
  // `big` must have even degree 2m.
  explicit CircleCtx(FieldCtx big);
  // Convenience: the standard field of degree 2m.
  static CircleCtx standard(int m);

  const FieldCtx& field() const { return big_; }
  int m() const { return m_; }
  Word q() const { return Word{1} << m_; }
  // A root of X^2 + X + 1 outside GF(q); present exactly when m is odd.
  const std::optional<Elem>& omega() const { return omega_; }

  bool on_circle(Elem u) const;
  bool in_base_field(Elem x) const;
  // Generator of GF(q)^* embedded in GF(q^2).
  Elem base_generator() const;

 private:
  FieldCtx big_;
  int m_;
  std::optional<Elem> omega_;
};

// g^(k(q-1)) for k = 0..q, g a generator of GF(q^2)^*.
std::vector<Elem> enumerate_circle(const CircleCtx& ctx);

Elem phi(const CircleCtx& ctx, Elem x);
Elem phi_inv(const CircleCtx& ctx, Elem u);

}  // namespace ptlab
