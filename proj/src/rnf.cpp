#include "hyperct/rnf.hpp"

#include "hyperct/errors.hpp"
#include "hyperct/shiftstruct.hpp"

namespace hyperct {

KernelShell rnf(const RatXY& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroInput, "rnf of zero");
  PolyY num = f.num(), den = f.den();
  RatXY S(1);
  while (num.degree() > 0 && den.degree() > 0) {
    std::set<long> hs = dispersion_set(den, num);
    if (hs.empty()) break;
    // positive shifts first, largest first; then negative, largest magnitude first
    long h = *hs.rbegin() > 0 ? *hs.rbegin() : *hs.begin();
    PolyY c = poly_gcd_y(num, den.shift_y(h));
    num = exact_div(num, c);
    den = exact_div(den, c.shift_y(-h));
    if (h > 0) {
      PolyY prod(RatX(1));
      for (long j = 1; j <= h; ++j) prod *= c.shift_y(-j);
      S *= RatXY(prod);
    } else {
      PolyY prod(RatX(1));
      for (long j = 0; j < -h; ++j) prod *= c.shift_y(j);
      S *= RatXY(PolyY(RatX(1)), prod);
    }
  }
  return KernelShell::make(num, den, S);
}

KernelShell kernel_shell_of_term(const HyperTerm& T) { return rnf(T.g); }

KernelShell move_denominator_factor(const KernelShell& ks, const PolyY& p, int alpha) {
  PolyY pa = p.pow(static_cast<unsigned>(alpha));
  if (alpha < 1 || p.degree() < 1 || !divides(pa, ks.v))
    throw Error(ErrorCode::NotAFactor, p.to_string() + " ^ " + std::to_string(alpha));
  PolyY v = exact_div(ks.v, pa) * p.shift_y(1).pow(static_cast<unsigned>(alpha));
  return KernelShell::make(ks.u, v, ks.S * RatXY(pa));
}

KernelShell move_numerator_factor(const KernelShell& ks, const PolyY& p, int alpha) {
  PolyY pa = p.pow(static_cast<unsigned>(alpha));
  if (alpha < 1 || p.degree() < 1 || !divides(pa, ks.u))
    throw Error(ErrorCode::NotAFactor, p.to_string() + " ^ " + std::to_string(alpha));
  PolyY down = p.shift_y(-1).pow(static_cast<unsigned>(alpha));
  PolyY u = exact_div(ks.u, pa) * down;
  return KernelShell::make(u, ks.v, ks.S * RatXY(down));
}

KernelShell normalize_kernel_shift_free(const KernelShell& ks) {
  KernelShell cur = ks;
  if (cur.v.degree() > 0) {
    for (const auto& cls : shift_classes_y(factor_y(cur.v).factors)) {
      // accumulated power walks up to the top member
      int carried = 0;
      std::size_t idx = 0;
      const long top = cls.members.back().first;
      for (long o = 0; o < top; ++o) {
        if (idx < cls.members.size() && cls.members[idx].first == o) carried += cls.members[idx++].second;
        if (carried > 0) cur = move_denominator_factor(cur, cls.representative.shift_y(o), carried);
      }
    }
  }
  if (cur.u.degree() > 0) {
    for (const auto& cls : shift_classes_y(factor_y(cur.u).factors)) {
      int carried = 0;
      std::size_t idx = cls.members.size();
      for (long o = cls.members.back().first; o > 0; --o) {
        if (idx > 0 && cls.members[idx - 1].first == o) carried += cls.members[--idx].second;
        if (carried > 0) cur = move_numerator_factor(cur, cls.representative.shift_y(o), carried);
      }
    }
  }
  return cur;
}

}  // namespace hyperct
