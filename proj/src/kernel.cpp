#include "hyperct/kernel.hpp"

namespace hyperct {

KernelShell KernelShell::make(const PolyY& u, const PolyY& v, const RatXY& S) {
  KernelShell ks;
  RatX s = v.lc().inverse();
  ks.u = u.scaled(s);
  ks.v = v.scaled(s);
  ks.K = RatXY(ks.u, ks.v);
  ks.S = S;
  return ks;
}

RatXY KernelShell::quotient() const { return K * S.shift_y(1) / S; }

}  // namespace hyperct
