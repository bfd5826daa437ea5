#include "hyperct/reduction.hpp"

#include <algorithm>
#include <atomic>
#include <limits>

#include "hyperct/errors.hpp"
#include "hyperct/factor.hpp"
#include "hyperct/partial_fractions.hpp"
#include "hyperct/rnf.hpp"
#include "hyperct/shiftstruct.hpp"

namespace hyperct {

namespace {

std::atomic<long> g_checks{0};
std::atomic<long> g_failures{0};

PolyY phi(const PolyY& u, const PolyY& v, const PolyY& p) { return u * p.shift_y(1) - v * p; }

std::vector<std::pair<PolyY, int>> factors_of(const PolyY& p) {
  if (p.degree() <= 0) return {};
  return factor_y(p).factors;
}

// X = P + A/D1 + C/D2 with D2 = den(X)/D1 coprime to D1
struct Split {
  PolyY P, A, C, D2;
};

Split split_coprime(const RatXY& X, const PolyY& D1) {
  Split s;
  auto [P, R] = divrem(X.num(), X.den());
  s.P = P;
  s.D2 = exact_div(X.den(), D1);
  if (D1.degree() <= 0) {
    s.C = R;
    return s;
  }
  if (s.D2.degree() <= 0) {
    s.A = R.scaled(s.D2.lc().inverse());
    s.D2 = PolyY(RatX(1));
    return s;
  }
  s.A = divrem(R * inverse_mod(s.D2, D1), D1).second;
  s.C = exact_div(R - s.A * s.D2, D1);
  return s;
}

PolyY max_power_dividing(const PolyY& p, const PolyY& d) {
  PolyY acc(RatX(1)), rest = d;
  while (rest.degree() >= p.degree()) {
    auto [q, r] = divrem(rest, p);
    if (!r.is_zero()) break;
    rest = q;
    acc *= p;
  }
  return acc;
}

}  // namespace

PolyY phi_K(const PolyY& p, const KernelShell& ks) { return phi(ks.u, ks.v, p); }

// ---------------------------------------------------------------- ComplementBasis

ComplementBasis::ComplementBasis(const PolyY& u, const PolyY& v, int cap) : u_(u), v_(v) {
  const int du = std::max(u.degree(), 0), dv = std::max(v.degree(), 0);
  if (du == dv && u.lc() == v.lc()) {
    const int m = du;
    if (m == 0) {
      d0_ = 0;
    } else {
      RatX d = (v.coeff(m - 1) - u.coeff(m - 1)) / u.lc();
      auto c = d.as_constant();
      if (c && c->get_den() == 1 && *c >= 0 && c->get_num().fits_sint_p()) d0_ = static_cast<int>(c->get_num().get_si());
    }
  }
  extend(cap);
}

void ComplementBasis::extend(int cap) {
  if (cap <= cap_) return;
  cap_ = cap;
  const int last = std::max(cap + 1, d0_);
  for (; next_d_ <= last; ++next_d_) {
    PolyY w = PolyY::monomial(RatX(1), next_d_);
    PolyY img = phi(u_, v_, w);
    while (!img.is_zero()) {
      auto it = reducers_.find(img.degree());
      if (it == reducers_.end()) break;
      RatX c = img.lc() / it->second.second.lc();
      img -= it->second.second.scaled(c);
      w -= it->second.first.scaled(c);
    }
    if (!img.is_zero()) reducers_.emplace(img.degree(), std::make_pair(w, img));
  }
}

std::vector<int> ComplementBasis::basis() const {
  std::vector<int> out;
  for (int l = 0; l <= cap_; ++l)
    if (!attainable(l)) out.push_back(l);
  return out;
}

int ComplementBasis::dimension() {
  const int m = std::max({u_.degree(), v_.degree(), 0});
  extend(m + std::max(d0_, 0) + 1);
  int n = 0;
  for (int l = 0; l <= m + std::max(d0_, 0) + 1; ++l)
    if (!attainable(l)) ++n;
  return n;
}

std::pair<PolyY, PolyY> ComplementBasis::reduce(const PolyY& p) {
  extend(std::max(p.degree(), 0));
  PolyY rest = p, w, q;
  while (!rest.is_zero()) {
    auto it = reducers_.find(rest.degree());
    if (it == reducers_.end()) {
      PolyY lt = PolyY::monomial(rest.lc(), rest.degree());
      q += lt;
      rest -= lt;
      continue;
    }
    RatX c = rest.lc() / it->second.second.lc();
    rest -= it->second.second.scaled(c);
    w += it->second.first.scaled(c);
  }
  return {w, q};
}

ComplementBasis complement_basis(const KernelShell& ks, int cap) { return ComplementBasis(ks.u, ks.v, cap); }

std::pair<PolyY, PolyY> polynomial_reduce(const PolyY& p, const KernelShell& ks) {
  ComplementBasis b(ks.u, ks.v, std::max(p.degree(), 0));
  return b.reduce(p);
}

// ---------------------------------------------------------------- residual forms

RatXY ResidualForm::value() const { return RatXY(a, b) + RatXY(q, v); }

// ---------------------------------------------------------------- ShellReducer

ShellReducer::ShellReducer(KernelShell ks)
    : ks_(std::move(ks)), fu_(factors_of(ks_.u)), fv_(factors_of(ks_.v)), basis_(ks_.u, ks_.v, 0) {}

ReductionResult ShellReducer::reduce(const RatXY& S, const std::vector<PolyY>& preferred) {
  const PolyY& u = ks_.u;
  const PolyY& v = ks_.v;
  ReductionResult out;
  out.r.v = v;
  if (S.is_zero()) return out;

  PartialFractions pf = partial_fractions_y(S);
  PolyY W = pf.polypart * v;
  RatXY G, ab;

  std::vector<std::pair<PolyY, int>> bases;
  for (const auto& t : pf.terms)
    if (std::none_of(bases.begin(), bases.end(), [&](const auto& b) { return b.first == t.base; }))
      bases.emplace_back(t.base, 1);

  for (const auto& cls : shift_classes_y(bases)) {
    const PolyY& rep = cls.representative;
    long lo = std::numeric_limits<long>::min(), hi = std::numeric_limits<long>::max();
    std::map<long, int> vmult;
    for (const auto& [g, m] : fu_)
      if (auto a = shift_offset(rep, g)) lo = std::max(lo, *a + 1);
    for (const auto& [g, m] : fv_)
      if (auto b = shift_offset(rep, g)) {
        hi = std::min(hi, *b - 1);
        vmult[*b] = m;
      }
    long target = std::clamp(0L, lo, hi);
    for (const auto& p : preferred)
      if (auto off = shift_offset(rep, p); off && *off >= lo && *off <= hi) {
        target = *off;
        break;
      }

    std::map<long, RatXY> pieces;
    for (const auto& t : pf.terms)
      if (auto off = shift_offset(rep, t.base))
        pieces[*off] += RatXY(t.num, t.base.pow(static_cast<unsigned>(t.power)));

    // upward moves: w -> K*sigma(w), g -= w
    while (!pieces.empty() && pieces.begin()->first < target) {
      auto [s, w] = *pieces.begin();
      pieces.erase(pieces.begin());
      if (w.is_zero()) continue;
      G -= w;
      RatXY X(u * w.num().shift_y(1), v * w.den().shift_y(1));
      PolyY next = rep.shift_y(s + 1);
      Split sp = split_coprime(X, max_power_dividing(next, X.den()));
      if (!divides(sp.D2, v)) throw Error(ErrorCode::Internal, "upward move left a non-v denominator");
      W += sp.P * v + sp.C * exact_div(v, sp.D2);
      if (!sp.A.is_zero()) pieces[s + 1] += RatXY(sp.A, exact_div(X.den(), sp.D2));
    }
    // downward moves: w -> sigma^{-1}(w/K), g += that; pieces over v are absorbed
    while (!pieces.empty() && pieces.rbegin()->first > target) {
      auto [s, w] = *pieces.rbegin();
      pieces.erase(std::prev(pieces.end()));
      if (w.is_zero()) continue;
      if (vmult.count(s) && divides(w.den(), v)) {
        W += w.num() * exact_div(v, w.den());
        continue;
      }
      RatXY Z(v.shift_y(-1) * w.num().shift_y(-1), u.shift_y(-1) * w.den().shift_y(-1));
      G += Z;
      PolyY next = rep.shift_y(s - 1);
      Split sp = split_coprime(Z, max_power_dividing(next, Z.den()));
      W += sp.P * v;
      if (!sp.C.is_zero()) {
        // c/e with e | sigma^{-1}(u): one upward move lands over v
        PolyY e_up = sp.D2.shift_y(1);
        G -= RatXY(sp.C, sp.D2);
        W += exact_div(u, e_up) * sp.C.shift_y(1);
      }
      if (!sp.A.is_zero()) pieces[s - 1] += RatXY(sp.A, exact_div(Z.den(), sp.D2));
    }
    for (const auto& [s, w] : pieces) ab += w;
  }

  auto [w, q] = basis_.reduce(W);
  G += RatXY(w);
  out.g = G;
  out.r.a = ab.num();
  out.r.b = ab.den();
  out.r.q = q;

  ++g_checks;
  RatXY G1 = G.shift_y(1);
  std::vector<Fraction> terms{{ks_.u * G1.num(), ks_.v * G1.den()},
                              {-G.num(), G.den()},
                              {out.r.a, out.r.b},
                              {out.r.q, ks_.v},
                              {-S.num(), S.den()}};
  if (!fractions_sum_to_zero(terms)) {
    ++g_failures;
    throw Error(ErrorCode::Internal, "reduction identity failed for S = " + S.to_string());
  }
  return out;
}

ReductionResult shell_reduce(const RatXY& S, const KernelShell& ks) { return ShellReducer(ks).reduce(S); }

bool residual_invariants_hold(const ResidualForm& r, const KernelShell& ks, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (r.b.is_zero() || !r.b.is_monic()) return fail("b not monic");
  if (!r.a.is_zero() && r.a.degree() >= r.b.degree()) return fail("deg a >= deg b");
  if (!poly_gcd_y(r.a, r.b).is_one() && !r.a.is_zero()) return fail("gcd(a, b) != 1");
  if (r.b.degree() > 0) {
    if (!is_shift_free_y(r.b)) return fail("b not shift-free");
    if (!is_strongly_prime(r.b, ks.u, ks.v)) return fail("b not strongly prime with K");
  }
  if (!r.q.is_zero()) {
    ComplementBasis cb(ks.u, ks.v, r.q.degree());
    for (int l = 0; l <= r.q.degree(); ++l)
      if (!r.q.coeff(l).is_zero() && cb.attainable(l)) return fail("q not in W_K");
  }
  return true;
}

SummabilityResult is_summable(const HyperTerm& T) {
  KernelShell ks = kernel_shell_of_term(T);
  ReductionResult red = shell_reduce(ks.S, ks);
  bool summable = red.r.is_zero();
  return {summable, ks, red};
}

ReductionResult align_residual(const ResidualForm& r, const KernelShell& ks, const PolyY& target) {
  std::vector<PolyY> pref;
  if (target.degree() > 0)
    for (const auto& [f, m] : factor_y(target).factors) pref.push_back(f);
  ReductionResult res = ShellReducer(ks).reduce(r.value(), pref);
  if (!divides(res.r.b, target)) throw Error(ErrorCode::NotAlignable, res.r.b.to_string() + " does not divide " + target.to_string());
  return res;
}

long reduction_identity_checks() { return g_checks.load(); }
long reduction_identity_failures() { return g_failures.load(); }

}  // namespace hyperct
