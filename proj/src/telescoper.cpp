#include "hyperct/telescoper.hpp"

#include <algorithm>

#include "hyperct/bounds.hpp"
#include "hyperct/errors.hpp"
#include "hyperct/factor.hpp"
#include "hyperct/rnf.hpp"
#include "hyperct/shiftstruct.hpp"

namespace hyperct {

namespace {

void add_factors(std::vector<PolyY>& out, const PolyY& p) {
  if (p.degree() <= 0) return;
  for (const auto& [f, m] : factor_y(p).factors)
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
}

}  // namespace

std::vector<std::vector<RatX>> TelescoperSystem::matrix() const {
  const int n = static_cast<int>(reductions.size());
  int qdeg = -1;
  for (const auto& red : reductions) qdeg = std::max(qdeg, red.r.q.degree());
  const int bdeg = B.degree();
  std::vector<std::vector<RatX>> rows(static_cast<std::size_t>(bdeg + qdeg + 1),
                                      std::vector<RatX>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    const ResidualForm& r = reductions[static_cast<std::size_t>(i)].r;
    if (!r.a.is_zero()) {
      PolyY A = r.a * exact_div(B, r.b);
      for (int k = 0; k < bdeg; ++k) rows[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = A.coeff(k);
    }
    for (int k = 0; k <= qdeg; ++k)
      rows[static_cast<std::size_t>(bdeg + k)][static_cast<std::size_t>(i)] = r.q.coeff(k);
  }
  return rows;
}

ResidualSequence::ResidualSequence(const HyperTerm& T, const KernelShell& ks, const PolyY& target)
    : reducer_(ks) {
  sys_.ks = ks;
  // sigma_x(T)/T = f = N * sigma_x(S)/S
  N_ = T.f * ks.S / ks.S.shift_x(Rat(1));
  add_factors(preferred_, target);
  push(ks.S);
}

void ResidualSequence::push(const RatXY& S) {
  ReductionResult red = reducer_.reduce(S, preferred_);
  PolyY B = lcm(sys_.B, red.r.b);
  if (!is_shift_free_y(B)) {
    red = [&] {
      ReductionResult al = align_residual(red.r, sys_.ks, sys_.B * red.r.b);
      al.g += red.g;
      return al;
    }();
    B = lcm(sys_.B, red.r.b);
    if (!is_shift_free_y(B)) throw Error(ErrorCode::NotAlignable, "common denominator is not shift-free");
  }
  add_factors(preferred_, red.r.b);
  sys_.B = B;
  sys_.shells.push_back(S);
  sys_.reductions.push_back(std::move(red));
}

void ResidualSequence::extend_to(int rho) {
  while (sys_.order() < rho) push(sys_.shells.back().shift_x(Rat(1)) * N_);
}

TelescoperSystem residual_sequence(const HyperTerm& T, const KernelShell& ks, int rho) {
  ResidualSequence seq(T, ks);
  seq.extend_to(rho);
  return seq.system();
}

bool existence_check(const ResidualForm& r0, PolyY* evidence) {
  if (r0.a.is_zero() || r0.b.degree() <= 0) return true;
  for (const auto& [p, m] : factor_y(r0.b).factors)
    if (!detect_integer_linear(p)) {
      if (evidence) *evidence = p;
      return false;
    }
  return true;
}

std::vector<std::vector<RatX>> nullspace(std::vector<std::vector<RatX>> rows, int ncols) {
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (int c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][static_cast<std::size_t>(c)].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    RatX inv = rows[r][static_cast<std::size_t>(c)].inverse();
    for (auto& e : rows[r]) e *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][static_cast<std::size_t>(c)].is_zero()) continue;
      RatX f = rows[i][static_cast<std::size_t>(c)];
      for (int k = 0; k < ncols; ++k)
        if (!rows[r][static_cast<std::size_t>(k)].is_zero())
          rows[i][static_cast<std::size_t>(k)] -= f * rows[r][static_cast<std::size_t>(k)];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<std::vector<RatX>> basis;
  for (int free = 0; free < ncols; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), free) != pivot_col.end()) continue;
    std::vector<RatX> v(static_cast<std::size_t>(ncols));
    v[static_cast<std::size_t>(free)] = RatX(1);
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[static_cast<std::size_t>(pivot_col[i])] = -rows[i][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<PolyX> normalize_operator(const std::vector<RatX>& v) {
  PolyX den(Rat(1));
  for (const auto& e : v) den = lcm(den, e.den());
  std::vector<PolyX> out;
  PolyX g;
  for (const auto& e : v) {
    out.push_back(e.num() * exact_div(den, e.den()));
    g = gcd(g, out.back());
  }
  for (auto& e : out) {
    if (e.is_zero()) continue;
    e = exact_div(e, g);
  }
  Int l = 1, cg = 0;
  for (const auto& e : out)
    for (const auto& c : e.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  for (const auto& e : out)
    for (const auto& c : e.coeffs()) {
      Int n = c.get_num() * (l / c.get_den());
      mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), n.get_mpz_t());
    }
  Rat s(l, cg);
  s.canonicalize();
  auto top = std::find_if(out.rbegin(), out.rend(), [](const PolyX& p) { return !p.is_zero(); });
  if (top != out.rend() && top->lc() < 0) s = -s;
  for (auto& e : out) e = e.scaled(s);
  return out;
}

std::optional<std::vector<PolyX>> solve_telescoper_system(const TelescoperSystem& sys) {
  const int n = static_cast<int>(sys.reductions.size());
  auto basis = nullspace(sys.matrix(), n);
  if (basis.empty()) return std::nullopt;
  // prefer the vector of least support at the top: the last free column
  return normalize_operator(basis.back());
}

bool verify_telescoper(const HyperTerm& T, const std::vector<PolyX>& e, const RatXY& c) {
  std::vector<Fraction> terms;
  RatXY F(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) F *= T.f.shift_x(Rat(static_cast<long>(i) - 1));
    if (!e[i].is_zero()) terms.emplace_back(F.num().scaled(RatX(e[i])), F.den());
  }
  RatXY c1 = c.shift_y(1);
  terms.emplace_back(-(T.g.num() * c1.num()), T.g.den() * c1.den());
  terms.emplace_back(c.num(), c.den());
  return fractions_sum_to_zero(terms);
}

bool verify_telescoper(const HyperTerm& T, const Telescoper& L) {
  if (L.e.empty() || static_cast<int>(L.e.size()) != L.order + 1) return false;
  return verify_telescoper(T, L.e, L.certificate_t);
}

TelescopeOutcome reduction_ct(const HyperTerm& T, std::optional<int> max_order) {
  TelescopeOutcome out;
  KernelShell ks = kernel_shell_of_term(T);
  ReductionResult r0 = ShellReducer(ks).reduce(ks.S);
  out.initial = r0.r;
  if (!existence_check(r0.r, &out.evidence)) {
    out.status = TelescopeOutcome::Status::NoTelescoper;
    return out;
  }
  UpperBound ub = upper_bound(r0.r.a.is_zero() ? PolyY(RatX(1)) : r0.r.b, ks);
  out.upper = ub.upper;
  ResidualSequence seq(T, ks, ub.B);
  for (int rho = 0;; ++rho) {
    if (max_order && rho > *max_order) {
      out.status = TelescopeOutcome::Status::OrderCapExceeded;
      return out;
    }
    if (rho > ub.upper)
      throw Error(ErrorCode::Internal, "no telescoper up to the upper bound " + std::to_string(ub.upper));
    seq.extend_to(rho);
    const TelescoperSystem& sys = seq.system();
    auto e = solve_telescoper_system(sys);
    if (!e) continue;
    Telescoper L;
    L.e = *e;
    L.order = rho;
    L.ks = ks;
    std::vector<RatXY> parts;
    for (int i = 0; i <= rho; ++i)
      if (!L.e[static_cast<std::size_t>(i)].is_zero())
        parts.push_back(RatXY(RatX(L.e[static_cast<std::size_t>(i)])) * sys.reductions[static_cast<std::size_t>(i)].g);
    L.certificate = sum_rational(parts);
    L.certificate_t = L.certificate * ks.S.inverse();
    if (!verify_telescoper(T, L)) throw Error(ErrorCode::Internal, "telescoper failed verification");
    out.telescoper = std::move(L);
    return out;
  }
}

}  // namespace hyperct
