#include "hyperct/shiftstruct.hpp"

#include <algorithm>
#include <map>

#include "hyperct/errors.hpp"

namespace hyperct {

namespace {

std::vector<PolyY> distinct_factors(const PolyY& p) {
  std::vector<PolyY> out;
  if (p.degree() <= 0) return out;
  for (const auto& [f, m] : factor_y(p).factors) out.push_back(f);
  return out;
}

std::optional<Int> as_integer(const RatX& c) {
  auto k = c.as_constant();
  if (!k || k->get_den() != 1) return std::nullopt;
  return k->get_num();
}

}  // namespace

std::optional<long> shift_offset(const PolyY& p, const PolyY& q) {
  const int d = p.degree();
  if (d <= 0 || d != q.degree()) return std::nullopt;
  RatX diff = (q.coeff(d - 1) - p.coeff(d - 1)) / (p.lc() * RatX(d));
  auto h = as_integer(diff);
  if (!h || !h->fits_slong_p()) return std::nullopt;
  long k = h->get_si();
  if (p.shift_y(k) != q) return std::nullopt;
  return k;
}

std::optional<long> shift_equivalent_y(const PolyY& p, const PolyY& q) {
  if (!is_irreducible_y(p)) throw Error(ErrorCode::NotIrreducible, p.to_string());
  if (!is_irreducible_y(q)) throw Error(ErrorCode::NotIrreducible, q.to_string());
  return shift_offset(p.monic(), q.monic());
}

std::set<long> dispersion_set(const PolyY& p, const PolyY& q) {
  if (p.is_zero() || q.is_zero()) throw Error(ErrorCode::ZeroInput, "dispersion of zero");
  std::set<long> out;
  auto fp = distinct_factors(p), fq = distinct_factors(q);
  for (const auto& f : fp)
    for (const auto& g : fq)
      if (auto h = shift_offset(f, g)) out.insert(*h);
  return out;
}

bool is_shift_free_y(const PolyY& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "shift-freeness of zero");
  auto fs = distinct_factors(p);
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = i + 1; j < fs.size(); ++j)
      if (shift_offset(fs[i], fs[j])) return false;
  return true;
}

bool is_shift_reduced(const RatXY& K) {
  if (K.is_zero()) throw Error(ErrorCode::ZeroInput, "zero kernel");
  return dispersion_set(K.num(), K.den()).empty();
}

bool is_strongly_prime(const PolyY& p, const PolyY& u, const PolyY& v) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "strong primeness of zero");
  auto fp = distinct_factors(p);
  // a factor g of u with g = sigma^i(f), i >= 0, or of v with f = sigma^i(g)
  for (const auto& f : fp) {
    for (const auto& g : distinct_factors(u))
      if (auto h = shift_offset(f, g); h && *h >= 0) return false;
    for (const auto& g : distinct_factors(v))
      if (auto h = shift_offset(f, g); h && *h <= 0) return false;
  }
  return true;
}

bool is_strongly_prime(const PolyY& p, const KernelShell& ks) {
  if (!is_shift_reduced(ks.K)) throw Error(ErrorCode::KernelNotShiftReduced, ks.K.to_string());
  return is_strongly_prime(p, ks.u, ks.v);
}

bool shift_related_y(const PolyY& b1, const PolyY& b2) {
  if (!is_shift_free_y(b1)) throw Error(ErrorCode::NotShiftFree, b1.to_string());
  if (!is_shift_free_y(b2)) throw Error(ErrorCode::NotShiftFree, b2.to_string());
  if (b1.degree() != b2.degree()) return false;
  if (b1.degree() <= 0) return true;
  auto f1 = factor_y(b1).factors, f2 = factor_y(b2).factors;
  if (f1.size() != f2.size()) return false;
  std::vector<bool> used(f2.size(), false);
  for (const auto& [f, m] : f1) {
    bool matched = false;
    for (std::size_t j = 0; j < f2.size() && !matched; ++j) {
      if (used[j] || f2[j].second != m) continue;
      if (shift_offset(f, f2[j].first)) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

std::vector<ShiftClassY> shift_classes_y(const std::vector<std::pair<PolyY, int>>& factors) {
  std::vector<ShiftClassY> classes;
  for (const auto& [f, m] : factors) {
    bool placed = false;
    for (auto& c : classes) {
      if (auto h = shift_offset(c.representative, f)) {
        c.members.emplace_back(*h, m);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({f, {{0, m}}});
  }
  for (auto& c : classes) {
    std::sort(c.members.begin(), c.members.end());
    long lo = c.members.front().first;
    if (lo != 0) {
      c.representative = c.representative.shift_y(lo);
      for (auto& mem : c.members) mem.first -= lo;
    }
  }
  return classes;
}

std::optional<IntegerLinearForm> detect_integer_linear(const PolyXY& p) {
  const int d = p.total_degree();
  if (d <= 0) return std::nullopt;
  Int lambda, mu;
  const Rat top_y = p.coeff(0, d);
  if (top_y == 0) {
    lambda = 1;
    mu = 0;
  } else {
    Rat ratio = p.coeff(1, d - 1) / (top_y * d);
    lambda = ratio.get_num();
    mu = ratio.get_den();
  }
  if (p.shift(Rat(mu), Rat(-lambda)) != p) return std::nullopt;
  IntegerLinearForm form{lambda, mu, UPoly()};
  if (mu != 0) {
    std::vector<Rat> c;
    for (int j = 0; j <= p.degree_y(); ++j) c.push_back(p.coeff(0, j));
    form.P = UPoly(std::move(c)).scale_arg(Rat(1, 1) / Rat(mu));
  } else {
    form.P = p.coeff(0);
  }
  return form;
}

std::optional<IntegerLinearForm> detect_integer_linear(const PolyY& p) {
  return detect_integer_linear(PolyXY::from_y(p).primitive());
}

std::pair<Int, Int> delta_op(const Int& lambda, const Int& mu) {
  Int g;
  mpz_gcd(g.get_mpz_t(), lambda.get_mpz_t(), mu.get_mpz_t());
  if (g != 1 || mu < 0) throw Error(ErrorCode::BadDirection, "(" + lambda.get_str() + ", " + mu.get_str() + ")");
  if (mu == 0) return {lambda, Int(0)};
  std::optional<std::pair<Int, Int>> best;
  bool best_pref = false;
  Int m = abs(mu);
  for (Int a = -m + 1; a < m; ++a) {
    Int rest = 1 - a * lambda;
    if (rest % mu != 0) continue;
    Int b = rest / mu;
    bool pref = abs(b) < abs(lambda);
    bool better = !best || (pref && !best_pref) ||
                  (pref == best_pref && (abs(a) < abs(best->first) ||
                                         (abs(a) == abs(best->first) && a > best->first)));
    if (better) {
      best = std::make_pair(a, b);
      best_pref = pref;
    }
  }
  return *best;
}

PolyY integer_linear_poly(const UPoly& P, const Int& lambda, const Int& mu, const Rat& c) {
  PolyY z = PolyY::linear(Rat(lambda), Rat(mu), c);
  PolyY acc;
  for (int i = P.degree(); i >= 0; --i) acc = acc * z + PolyY(RatX(P.coeff(i)));
  return acc;
}

RatXY ShiftHomDecomposition::reconstruct() const {
  RatXY r(constant);
  for (const auto& cls : classes)
    for (const auto& [k, m] : cls.xi)
      r *= RatXY(integer_linear_poly(cls.P, cls.lambda, cls.mu, Rat(k))).pow(m);
  return r;
}

ShiftHomDecomposition integer_linear_decomposition(const RatXY& r) {
  if (r.is_zero()) throw Error(ErrorCode::ZeroInput, "decomposition of zero");
  ShiftHomDecomposition out;
  Factorization fn = r.num().degree() > 0 ? factor_y(r.num()) : Factorization{r.num().lc(), {}};
  Factorization fd = r.den().degree() > 0 ? factor_y(r.den()) : Factorization{RatX(1), {}};
  RatX constant = fn.unit / fd.unit;
  struct Entry {
    UPoly P;  // monic
    Int lambda, mu;
    Rat shift;
    int mult;
  };
  std::vector<Entry> entries;
  auto take = [&](const Factorization& f, int sign) {
    for (const auto& [q, m] : f.factors) {
      auto form = detect_integer_linear(q);
      if (!form) throw Error(ErrorCode::NotIntegerLinear, q.to_string());
      UPoly P = form->P.monic();
      // q is monic in y: q = P(z) * mu^deg / lc(q-normalization)
      PolyY rebuilt = integer_linear_poly(P, form->lambda, form->mu);
      RatX scale = q.lc() / rebuilt.lc();
      constant = constant * scale.pow(sign * m);
      entries.push_back({P, form->lambda, form->mu, Rat(0), sign * m});
    }
  };
  take(fn, 1);
  take(fd, -1);
  out.constant = constant;
  // group by direction and shift of P
  for (const auto& e : entries) {
    bool placed = false;
    for (auto& cls : out.classes) {
      if (cls.lambda != e.lambda || cls.mu != e.mu || cls.P.degree() != e.P.degree()) continue;
      const int d = e.P.degree();
      Rat k = (e.P.coeff(d - 1) - cls.P.coeff(d - 1)) / d;
      if (k.get_den() != 1 || cls.P.shift(k) != e.P) continue;
      cls.xi.emplace_back(k.get_num().get_si(), e.mult);
      placed = true;
      break;
    }
    if (!placed) out.classes.push_back({e.P, e.lambda, e.mu, {{0, e.mult}}});
  }
  for (auto& cls : out.classes) {
    std::sort(cls.xi.begin(), cls.xi.end());
    long lo = cls.xi.front().first;
    if (lo != 0) {
      cls.P = cls.P.shift(Rat(lo));
      for (auto& t : cls.xi) t.first -= lo;
    }
  }
  return out;
}

}  // namespace hyperct
