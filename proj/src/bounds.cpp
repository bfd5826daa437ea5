#include "hyperct/bounds.hpp"

#include <algorithm>

#include "hyperct/errors.hpp"
#include "hyperct/factor.hpp"
#include "hyperct/frontend.hpp"
#include "hyperct/rnf.hpp"
#include "hyperct/shiftstruct.hpp"
#include "hyperct/telescoper.hpp"

namespace hyperct {

namespace {

// p = P(lambda*x + mu*y) up to a factor in C(x), P monic
struct LinFactor {
  PolyY poly;
  UPoly P;
  Int lambda, mu;
  int mult;
};

std::optional<LinFactor> as_linear(const PolyY& p, int mult) {
  auto form = detect_integer_linear(p);
  if (!form) return std::nullopt;
  return LinFactor{p, form->P.monic(), form->lambda, form->mu, mult};
}

std::vector<LinFactor> linear_factors(const PolyY& b) {
  std::vector<LinFactor> out;
  if (b.degree() <= 0) return out;
  for (const auto& [p, m] : factor_y(b).factors) {
    auto lf = as_linear(p, m);
    if (!lf) throw Error(ErrorCode::NotIntegerLinear, p.to_string());
    out.push_back(*lf);
  }
  return out;
}

// k with b.P(z) = a.P(z + k)
std::optional<long> z_offset(const LinFactor& a, const LinFactor& b) {
  if (a.lambda != b.lambda || a.mu != b.mu || a.P.degree() != b.P.degree()) return std::nullopt;
  const int d = a.P.degree();
  Rat k = (b.P.coeff(d - 1) - a.P.coeff(d - 1)) / d;
  if (k.get_den() != 1 || a.P.shift(k) != b.P) return std::nullopt;
  return k.get_num().get_si();
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// least rho >= start with lambda*rho = t (mod mu)
std::optional<long> least_solution(const Int& lambda, const Int& mu, long t, long start) {
  const long m = mu.get_si();
  const long l = mod_floor(lambda.get_si(), m);
  for (long rho = start; rho < start + m; ++rho)
    if (mod_floor(l * rho - t, m) == 0) return rho;
  return std::nullopt;
}

std::vector<PolyY> distinct(const PolyY& p) {
  std::vector<PolyY> out;
  if (p.degree() <= 0) return out;
  for (const auto& [f, m] : factor_y(p).factors) out.push_back(f);
  return out;
}

// y-offset l with sigma_y^l(f) strongly prime with K, closest to 0
long strongly_prime_offset(const PolyY& f, const std::vector<PolyY>& fu, const std::vector<PolyY>& fv) {
  long lo = std::numeric_limits<long>::min(), hi = std::numeric_limits<long>::max();
  for (const auto& g : fu)
    if (auto a = shift_offset(f, g)) lo = std::max(lo, *a + 1);
  for (const auto& g : fv)
    if (auto b = shift_offset(f, g)) hi = std::min(hi, *b - 1);
  if (lo > hi) throw Error(ErrorCode::Internal, "no strongly prime shift of " + f.to_string());
  return std::clamp(0L, lo, hi);
}

}  // namespace

int integer_linear_degree(const PolyY& b) {
  auto fs = linear_factors(b);
  std::vector<bool> done(fs.size(), false);
  int total = 0;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (done[i]) continue;
    int m = fs[i].mult;
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (!done[j] && z_offset(fs[i], fs[j])) {
        done[j] = true;
        m = std::max(m, fs[j].mult);
      }
    total += static_cast<int>(fs[i].mu.get_si()) * m * fs[i].P.degree();
  }
  return total;
}

PolyY build_common_denominator(const PolyY& b, const KernelShell& ks) {
  auto fs = linear_factors(b);
  const auto fu = distinct(ks.u), fv = distinct(ks.v);
  std::vector<bool> done(fs.size(), false);
  PolyY B(RatX(1));
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (done[i]) continue;
    const LinFactor& rep = fs[i];
    const long mu = rep.mu.get_si();
    // residue of the z-offset mod mu -> factor of b
    std::vector<std::optional<std::size_t>> at(static_cast<std::size_t>(mu));
    int m = 0;
    for (std::size_t j = i; j < fs.size(); ++j) {
      auto k = j == i ? std::optional<long>(0) : z_offset(rep, fs[j]);
      if (!k) continue;
      done[j] = true;
      m = std::max(m, fs[j].mult);
      at[static_cast<std::size_t>(mod_floor(*k, mu))] = j;
    }
    for (long j = 0; j < mu; ++j) {
      PolyY f;
      if (auto idx = at[static_cast<std::size_t>(j)]) {
        f = fs[*idx].poly;
      } else {
        f = integer_linear_poly(rep.P, rep.lambda, rep.mu, Rat(j)).monic();
        f = f.shift_y(strongly_prime_offset(f, fu, fv));
      }
      B *= f.pow(static_cast<unsigned>(m));
    }
  }
  return B.monic();
}

UpperBound upper_bound(const PolyY& b, const KernelShell& ks) {
  UpperBound ub;
  ub.B = build_common_denominator(b, ks);
  ub.dim_wk = ComplementBasis(ks.u, ks.v, std::max({ks.u.degree(), ks.v.degree(), 0}) + 1).dimension();
  ub.upper = std::max(ub.B.degree(), 0) + ub.dim_wk;
  int bracket = 0;
  if (!ks.K.is_one()) bracket = (ks.v - ks.u).degree() <= ks.u.degree() - 1 ? 1 : 0;
  ub.closed_form = std::max({ks.u.degree(), ks.v.degree(), 0}) - bracket + integer_linear_degree(b);
  return ub;
}

UpperBound upper_bound(const HyperTerm& T) {
  KernelShell ks = kernel_shell_of_term(T);
  ReductionResult red = ShellReducer(ks).reduce(ks.S);
  PolyY evidence;
  if (!existence_check(red.r, &evidence))
    throw Error(ErrorCode::NoTelescoperExists, "non-integer-linear factor " + evidence.to_string());
  return upper_bound(red.r.a.is_zero() ? PolyY(RatX(1)) : red.r.b, ks);
}

int lower_bound(const ResidualForm& r) {
  if (r.is_zero()) throw Error(ErrorCode::NotApplicable, "summable input");
  if (r.a.is_zero() || r.b.degree() <= 0) return 1;
  auto fs = linear_factors(r.b);
  long best = 1;
  for (const auto& p : fs) {
    std::optional<long> least;
    for (const auto& q : fs) {
      if (q.mult < p.mult) continue;
      auto k = z_offset(p, q);
      if (!k) continue;
      // sigma_x^rho(q) = P(z + k + lambda*rho) = sigma_y^l(p) = P(z + mu*l)
      if (auto rho = least_solution(p.lambda, p.mu, -*k, 1)) least = least ? std::min(*least, *rho) : *rho;
    }
    if (least) best = std::max(best, *least);
  }
  return static_cast<int>(best);
}

std::optional<int> lower_bound(const HyperTerm& T) {
  KernelShell ks = kernel_shell_of_term(T);
  ReductionResult red = ShellReducer(ks).reduce(ks.S);
  if (red.r.is_zero()) return std::nullopt;
  return lower_bound(red.r);
}

int abramov_le_bound(const HyperTerm& T, const KernelShell& ks, const ResidualForm& r) {
  if (r.is_zero()) throw Error(ErrorCode::NotApplicable, "summable input");
  if (r.a.is_zero() || r.b.degree() <= 0) return 1;
  auto fs = linear_factors(r.b);
  // sigma_x(H')/H' with H' = H/v
  RatXY N = T.f * ks.S / ks.S.shift_x(Rat(1));
  RatXY Np = N * RatXY(ks.v) / RatXY(ks.v.shift_x(Rat(1)));
  std::vector<LinFactor> ds;
  for (const auto& q : distinct(Np.den()))
    if (auto lf = as_linear(q, 1)) ds.push_back(*lf);
  long best = 1;
  for (const auto& p : fs) {
    std::optional<long> least;
    auto take = [&](std::optional<long> rho) {
      if (rho) least = least ? std::min(*least, *rho) : *rho;
    };
    for (const auto& q : fs)
      if (auto k = z_offset(p, q)) take(least_solution(p.lambda, p.mu, -*k, 1));
    // sigma_x^{rho-1}(q) = P(z + k + lambda*(rho-1))
    for (const auto& q : ds)
      if (auto k = z_offset(p, q))
        if (auto s = least_solution(p.lambda, p.mu, -*k, 0)) take(*s + 1);
    if (least) best = std::max(best, *least);
  }
  return static_cast<int>(best);
}

std::optional<int> abramov_le_bound(const HyperTerm& T) {
  KernelShell ks = kernel_shell_of_term(T);
  ReductionResult red = ShellReducer(ks).reduce(ks.S);
  if (red.r.is_zero()) return std::nullopt;
  return abramov_le_bound(T, ks, red.r);
}

int apagodu_zeilberger_bound(const ProperTermSpec& spec) {
  Int up = 0, down = 0;
  for (const auto& f : spec.factors) {
    switch (f.kind) {
      case FactorKind::NumPlus:
      case FactorKind::DenMinus: up += f.coeff_y; break;
      case FactorKind::NumMinus:
      case FactorKind::DenPlus: down += f.coeff_y; break;
    }
  }
  return static_cast<int>(std::max(up, down).get_si());
}

BoundReport bounds_report(const HyperTerm& T) {
  BoundReport rep;
  KernelShell ks = kernel_shell_of_term(T);
  ReductionResult red = ShellReducer(ks).reduce(ks.S);
  PolyY evidence;
  if (!existence_check(red.r, &evidence))
    throw Error(ErrorCode::NoTelescoperExists, "non-integer-linear factor " + evidence.to_string());
  rep.b = red.r.a.is_zero() ? PolyY(RatX(1)) : red.r.b;
  UpperBound ub = upper_bound(rep.b, ks);
  rep.upper = ub.upper;
  rep.upper_closed_form = ub.closed_form;
  rep.B = ub.B;
  rep.dim_wk = ub.dim_wk;
  if (!red.r.is_zero()) {
    rep.lower = lower_bound(red.r);
    rep.b_al = abramov_le_bound(T, ks, red.r);
  }
  if (T.provenance)
    if (auto spec = proper_form(*T.provenance)) rep.b_az = apagodu_zeilberger_bound(*spec);
  return rep;
}

}  // namespace hyperct
