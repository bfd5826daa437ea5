#include "hyperct/partial_fractions.hpp"

namespace hyperct {

RatXY PartialFractions::reassemble() const {
  RatXY r(polypart);
  for (const auto& t : terms) r += RatXY(t.num, t.base.pow(static_cast<unsigned>(t.power)));
  return r;
}

PartialFractions partial_fractions_y(const RatXY& f) {
  if (f.den().degree() <= 0) return {f.num(), {}};
  return partial_fractions_y(f, factor_y(f.den()));
}

PartialFractions partial_fractions_y(const RatXY& f, const Factorization& den_factors) {
  PartialFractions out;
  auto [q, rem] = divrem(f.num(), f.den());
  out.polypart = q;
  if (rem.is_zero()) return out;
  const PolyY& den = f.den();
  for (const auto& [p, e] : den_factors.factors) {
    PolyY local = p.pow(static_cast<unsigned>(e));
    PolyY c = rem;
    if (den_factors.factors.size() > 1) {
      PolyY cofactor = exact_div(den, local);
      c = divrem(rem * inverse_mod(cofactor, local), local).second;
    }
    // p-adic expansion: c / p^e = sum c_j / p^(e-j)
    for (int j = 0; j < e && !c.is_zero(); ++j) {
      auto [cq, cr] = divrem(c, p);
      if (!cr.is_zero()) out.terms.push_back({cr, p, e - j});
      c = std::move(cq);
    }
  }
  return out;
}

}  // namespace hyperct
