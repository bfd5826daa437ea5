#include "hyperct/factor.hpp"

#include <algorithm>
#include <map>

#include "hyperct/errors.hpp"

namespace hyperct {

namespace {

// ---- dense polynomials over Z/pZ, coefficients in [0, p)

using ZP = std::vector<Int>;

void zp_trim(ZP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zp_deg(const ZP& a) { return a.empty() ? kNegInf : static_cast<int>(a.size()) - 1; }

Int mod(const Int& a, const Int& p) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
  return r;
}

Int inv_mod(const Int& a, const Int& p) {
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
    throw Error(ErrorCode::Internal, "non-invertible residue");
  return r;
}

ZP zp_from(const UPoly& f, const Int& p) {
  ZP r;
  for (const auto& c : f.coeffs()) r.push_back(mod(c.get_num(), p) * inv_mod(c.get_den(), p) % p);
  zp_trim(r);
  return r;
}

ZP zp_sub(const ZP& a, const ZP& b, const Int& p) {
  ZP r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = mod(r[i] - b[i], p);
  zp_trim(r);
  return r;
}

ZP zp_mul(const ZP& a, const ZP& b, const Int& p) {
  if (a.empty() || b.empty()) return {};
  ZP r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& c : r) c = mod(c, p);
  zp_trim(r);
  return r;
}

std::pair<ZP, ZP> zp_divrem(const ZP& a, const ZP& b, const Int& p) {
  if (zp_deg(a) < zp_deg(b)) return {{}, a};
  ZP r = a;
  const int db = zp_deg(b);
  ZP q(static_cast<std::size_t>(zp_deg(a) - db) + 1, Int(0));
  Int inv = inv_mod(b.back(), p);
  for (int i = zp_deg(a); i >= db; --i) {
    Int f = r[static_cast<std::size_t>(i)] * inv % p;
    if (f == 0) continue;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto& t = r[static_cast<std::size_t>(i - db + j)];
      t = mod(t - f * b[static_cast<std::size_t>(j)], p);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  zp_trim(r);
  zp_trim(q);
  return {q, r};
}

ZP zp_monic(const ZP& a, const Int& p) {
  if (a.empty()) return a;
  Int inv = inv_mod(a.back(), p);
  ZP r = a;
  for (auto& c : r) c = c * inv % p;
  return r;
}

ZP zp_gcd(ZP a, ZP b, const Int& p) {
  while (!b.empty()) {
    ZP r = zp_divrem(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return zp_monic(a, p);
}

ZP zp_powmod(const ZP& base, const Int& e, const ZP& f, const Int& p) {
  ZP result{Int(1)}, b = zp_divrem(base, f, p).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = zp_divrem(zp_mul(result, result, p), f, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = zp_divrem(zp_mul(result, b, p), f, p).second;
  }
  return result;
}

// Cantor-Zassenhaus equal-degree splitting
void zp_edf(const ZP& g, int d, const Int& p, gmp_randclass& rng, std::vector<ZP>& out) {
  if (zp_deg(g) == d) {
    out.push_back(g);
    return;
  }
  Int pd;
  mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(d));
  Int e = (pd - 1) / 2;
  while (true) {
    ZP a(static_cast<std::size_t>(zp_deg(g)));
    for (auto& c : a) c = rng.get_z_range(p);
    zp_trim(a);
    if (zp_deg(a) < 1) continue;
    ZP b = zp_powmod(a, e, g, p);
    b = zp_sub(b, ZP{Int(1)}, p);
    ZP c = zp_gcd(g, b, p);
    if (zp_deg(c) > 0 && zp_deg(c) < zp_deg(g)) {
      zp_edf(c, d, p, rng, out);
      zp_edf(zp_divrem(g, c, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<ZP> zp_factor_squarefree_monic(ZP f, const Int& p) {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20240601UL);
  std::vector<ZP> out;
  const ZP y{Int(0), Int(1)};
  ZP h = y;
  for (int d = 1; 2 * d <= zp_deg(f); ++d) {
    h = zp_powmod(h, p, f, p);
    ZP g = zp_gcd(f, zp_sub(h, y, p), p);
    if (zp_deg(g) > 0) {
      zp_edf(g, d, p, rng, out);
      f = zp_divrem(f, g, p).first;
      h = zp_divrem(h, f, p).second;
    }
  }
  if (zp_deg(f) > 0) out.push_back(zp_monic(f, p));
  return out;
}

UPoly symmetric_lift(const ZP& a, const Int& p) {
  Int half = p / 2;
  std::vector<Rat> c;
  for (const auto& v : a) c.emplace_back(v > half ? Int(v - p) : v);
  return UPoly(std::move(c));
}

// integer primitive with positive leading coefficient
UPoly integer_primitive(const UPoly& f) {
  if (f.is_zero()) return f;
  Rat c = f.content();
  if (f.lc() < 0) c = -c;
  return f.scaled(Rat(1) / c);
}

Int norm2_ceil(const UPoly& f) {
  Int s = 0;
  for (const auto& c : f.coeffs()) s += c.get_num() * c.get_num();
  Int r;
  mpz_sqrt(r.get_mpz_t(), s.get_mpz_t());
  return r + 1;
}

template <class Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

// ---- truncated power series in t with coefficients in Q[y]

using TY = std::vector<UPoly>;  // index = power of t

TY ty_mul(const TY& a, const TY& b, std::size_t k) {
  TY r(k);
  for (std::size_t i = 0; i < a.size() && i < k; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < k; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

// lift M = A0*B0 (mod t) to M = A*B (mod t^k), A, B monic in y
std::pair<TY, TY> hensel_lift2(const TY& m, const UPoly& a0, const UPoly& b0, std::size_t k) {
  auto [g, s, t] = ext_gcd(a0, b0);
  if (g.degree() != 0) throw Error(ErrorCode::Internal, "Hensel lift: factors not coprime");
  TY a(k), b(k);
  a[0] = a0;
  b[0] = b0;
  for (std::size_t j = 1; j < k; ++j) {
    UPoly e = j < m.size() ? m[j] : UPoly();
    for (std::size_t i = 1; i < j; ++i) e -= a[i] * b[j - i];
    if (e.is_zero()) continue;
    UPoly da = divrem(t * e, a0).second;
    UPoly db = exact_div(e - da * b0, a0);
    a[j] = da;
    b[j] = db;
  }
  return {a, b};
}

PolyXY ty_to_xy(const TY& s) {
  int dy = 0;
  for (const auto& c : s) dy = std::max(dy, c.degree());
  std::vector<std::vector<Rat>> cs(static_cast<std::size_t>(dy) + 1,
                                   std::vector<Rat>(s.size(), Rat(0)));
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int j = 0; j <= s[i].degree(); ++j) cs[static_cast<std::size_t>(j)][i] = s[i].coeff(j);
  std::vector<PolyX> r;
  for (auto& c : cs) r.emplace_back(std::move(c));
  return PolyXY(std::move(r));
}

TY xy_to_ty(const PolyXY& f) {
  int dt = std::max(f.degree_x(), 0);
  std::vector<std::vector<Rat>> cs(static_cast<std::size_t>(dt) + 1,
                                   std::vector<Rat>(static_cast<std::size_t>(f.degree_y()) + 1, Rat(0)));
  for (int j = 0; j <= f.degree_y(); ++j)
    for (int i = 0; i <= f.coeff(j).degree(); ++i)
      cs[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = f.coeff(j).coeff(i);
  TY r;
  for (auto& c : cs) r.emplace_back(std::move(c));
  return r;
}

std::vector<UPoly> squarefree_parts_q(const UPoly& p, std::vector<int>& mult) {
  std::vector<UPoly> out;
  UPoly a = p.monic();
  UPoly da = a.derivative();
  UPoly b = gcd(a, da);
  UPoly c = exact_div(a, b);
  UPoly d = exact_div(da, b) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    UPoly g = gcd(c, d);
    if (g.degree() > 0) {
      out.push_back(g);
      mult.push_back(i);
    }
    c = exact_div(c, g);
    d = exact_div(d, g) - c.derivative();
    ++i;
  }
  return out;
}

}  // namespace

std::vector<UPoly> factor_squarefree_z(const UPoly& input) {
  UPoly f = integer_primitive(input);
  const int n = f.degree();
  if (n <= 1) return {f};
  Int lc = f.lc().get_num();
  Int bound = norm2_ceil(f) * abs(lc) * 2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  Int p;
  mpz_nextprime(p.get_mpz_t(), bound.get_mpz_t());
  ZP fp;
  while (true) {
    fp = zp_from(f, p);
    ZP dp = zp_from(f.derivative(), p);
    if (zp_deg(zp_gcd(fp, dp, p)) == 0) break;
    mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
  }
  std::vector<ZP> mods = zp_factor_squarefree_monic(zp_monic(fp, p), p);
  if (mods.size() == 1) return {f};

  std::vector<UPoly> out;
  UPoly rest = f;
  int s = 1;
  while (2 * s <= static_cast<int>(mods.size())) {
    bool found = for_each_subset(static_cast<int>(mods.size()), s, [&](const std::vector<int>& idx) {
      ZP prod{mod(rest.lc().get_num(), p)};
      for (int i : idx) prod = zp_mul(prod, mods[static_cast<std::size_t>(i)], p);
      UPoly cand = integer_primitive(symmetric_lift(prod, p));
      auto [q, r] = divrem(rest, cand);
      if (!r.is_zero()) return false;
      out.push_back(cand);
      rest = integer_primitive(q);
      for (auto it = idx.rbegin(); it != idx.rend(); ++it) mods.erase(mods.begin() + *it);
      return true;
    });
    if (!found) ++s;
  }
  if (rest.degree() > 0) out.push_back(rest);
  return out;
}

std::vector<PolyXY> factor_squarefree_xy(const PolyXY& input) {
  PolyXY f = input.primitive();
  if (f.degree_y() <= 1) return {f};
  if (f.degree_x() <= 0) {
    std::vector<PolyXY> out;
    for (const auto& g : factor_squarefree_z(f.eval_x(Rat(0)))) {
      std::vector<PolyX> cs;
      for (const auto& c : g.coeffs()) cs.emplace_back(c);
      out.push_back(PolyXY(std::move(cs)).primitive());
    }
    return out;
  }

  // choose an evaluation point keeping degree and square-freeness
  long best_x0 = 0;
  std::vector<UPoly> best;
  int tried = 0;
  for (long k = 0; tried < 3 && k < 200; ++k) {
    long x0 = (k % 2 == 0) ? k / 2 : -(k + 1) / 2;
    if (f.lc().eval(Rat(x0)) == 0) continue;
    UPoly f0 = f.eval_x(Rat(x0));
    if (gcd(f0, f0.derivative()).degree() != 0) continue;
    ++tried;
    std::vector<UPoly> fs = factor_squarefree_z(f0);
    if (best.empty() || fs.size() < best.size()) {
      best = std::move(fs);
      best_x0 = x0;
    }
    if (best.size() == 1) break;
  }
  if (best.empty()) throw Error(ErrorCode::Internal, "no admissible evaluation point");
  if (best.size() == 1) return {f};

  PolyXY g = f.shift_x(Rat(best_x0));
  const UPoly lead = g.lc();
  const std::size_t k = static_cast<std::size_t>(g.degree_x() + lead.degree() + 2);

  // monic M = G / lc_y(G) as a power series in t
  std::vector<Rat> linv(k, Rat(0));
  linv[0] = Rat(1) / lead.coeff(0);
  for (std::size_t i = 1; i < k; ++i) {
    Rat acc(0);
    for (std::size_t j = 1; j <= i; ++j) acc += lead.coeff(static_cast<int>(j)) * linv[i - j];
    linv[i] = -acc * linv[0];
  }
  TY linv_ty;
  for (const auto& c : linv) linv_ty.emplace_back(c);
  TY m = ty_mul(xy_to_ty(g), linv_ty, k);

  std::vector<TY> lifted;
  TY rest = m;
  for (std::size_t i = 0; i + 1 < best.size(); ++i) {
    UPoly a0 = best[i].monic();
    UPoly b0(Rat(1));
    for (std::size_t j = i + 1; j < best.size(); ++j) b0 = b0 * best[j].monic();
    auto [a, b] = hensel_lift2(rest, a0, b0, k);
    lifted.push_back(std::move(a));
    rest = std::move(b);
  }
  lifted.push_back(std::move(rest));

  std::vector<PolyXY> out;
  PolyXY h = g;
  int s = 1;
  while (2 * s <= static_cast<int>(lifted.size())) {
    bool found = for_each_subset(static_cast<int>(lifted.size()), s, [&](const std::vector<int>& idx) {
      TY prod;
      for (const auto& c : h.lc().coeffs()) prod.emplace_back(c);
      for (int i : idx) prod = ty_mul(prod, lifted[static_cast<std::size_t>(i)], k);
      PolyXY cand = ty_to_xy(prod).primitive();
      if (cand.degree_y() <= 0) return false;
      PolyXY q;
      if (!try_divide_xy(h, cand, q)) return false;
      out.push_back(cand);
      h = q.primitive();
      for (auto it = idx.rbegin(); it != idx.rend(); ++it) lifted.erase(lifted.begin() + *it);
      return true;
    });
    if (!found) ++s;
  }
  if (h.degree_y() > 0) out.push_back(h);
  for (auto& c : out) c = c.shift_x(Rat(-best_x0)).primitive();
  return out;
}

PolyY Factorization::expand() const {
  PolyY r(unit);
  for (const auto& [f, m] : factors) r = r * f.pow(static_cast<unsigned>(m));
  return r;
}

std::vector<std::pair<PolyY, int>> squarefree_y(const PolyY& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "square-free decomposition of zero");
  std::vector<std::pair<PolyY, int>> out;
  if (p.degree() == 0) return out;
  PolyY a = p.monic();
  PolyY da = a.derivative();
  PolyY b = poly_gcd_y(a, da);
  PolyY c = exact_div(a, b);
  PolyY d = exact_div(da, b) - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    PolyY g = poly_gcd_y(c, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    c = exact_div(c, g);
    d = exact_div(d, g) - c.derivative();
    ++i;
  }
  return out;
}

Factorization factor_y(const PolyY& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "factorization of zero");
  Factorization r;
  r.unit = p.lc();
  for (const auto& [q, m] : squarefree_y(p)) {
    if (q.degree() == 1) {
      r.factors.emplace_back(q, m);
      continue;
    }
    for (const auto& g : factor_squarefree_xy(PolyXY::from_y(q).primitive()))
      r.factors.emplace_back(g.to_y().monic(), m);
  }
  std::sort(r.factors.begin(), r.factors.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.to_string() < b.first.to_string();
  });
  return r;
}

std::vector<std::pair<UPoly, int>> factor_q(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "factorization of zero");
  std::vector<std::pair<UPoly, int>> out;
  std::vector<int> mult;
  std::vector<UPoly> parts = squarefree_parts_q(p, mult);
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (const auto& g : factor_squarefree_z(integer_primitive(parts[i])))
      out.emplace_back(g.monic(), mult[i]);
  return out;
}

bool is_irreducible_y(const PolyY& p) {
  if (p.is_zero() || p.degree() < 1) return false;
  Factorization f = factor_y(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace hyperct
