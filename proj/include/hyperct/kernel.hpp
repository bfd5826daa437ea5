#pragma once

#include "hyperct/ratxy.hpp"

namespace hyperct {

/// Multiplicative decomposition T = S*H with sigma_y(H)/H = K = u/v.
struct KernelShell {
  RatXY K;
  PolyY u;  // carries the unit
  PolyY v;  // monic
  RatXY S;

  static KernelShell make(const PolyY& u, const PolyY& v, const RatXY& S);
  /// The shift quotient this decomposition represents: K*sigma_y(S)/S.
  RatXY quotient() const;
};

}  // namespace hyperct
