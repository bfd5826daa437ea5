#include "hyperct/hyperterm.hpp"

#include "hyperct/errors.hpp"

namespace hyperct {

bool HyperTerm::compatible() const {
  if (f.is_zero() || g.is_zero()) return false;
  RatXY gx = g.shift_x(Rat(1)), fy = f.shift_y(1);
  return fractions_sum_to_zero({{gx.num() * f.num(), gx.den() * f.den()}, {-(fy.num() * g.num()), fy.den() * g.den()}});
}

HyperTerm HyperTerm::make(const RatXY& f, const RatXY& g) {
  HyperTerm t{f, g, nullptr};
  if (!t.compatible())
    throw Error(ErrorCode::CompatibilityViolation,
                "sigma_x(g)*f != sigma_y(f)*g for f = " + f.to_string() + ", g = " + g.to_string());
  return t;
}

}  // namespace hyperct
