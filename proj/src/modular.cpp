#include "modular.hpp"

#include <mutex>

namespace hyperct::modp {

namespace {

void trim(Vec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

// integer multiple of a with coprime integer coefficients, positive lc
std::vector<Int> primitive_int(const UPoly& a) {
  Int l = a.denominator_lcm();
  std::vector<Int> r;
  Int g = 0;
  for (const auto& c : a.coeffs()) {
    r.push_back(c.get_num() * (l / c.get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.back().get_mpz_t());
  }
  if (r.back() < 0) g = -g;
  for (auto& c : r) c /= g;
  return r;
}

Vec reduce_int(const std::vector<Int>& a, u64 p) {
  Vec r(a.size());
  Int m;
  Int pz = static_cast<unsigned long>(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(m.get_mpz_t(), a[i].get_mpz_t(), pz.get_mpz_t());
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

bool divides_int(const std::vector<Int>& b, const std::vector<Int>& a) {
  // exact division over Z; b has lc dividing every needed quotient coefficient
  if (a.size() < b.size()) return false;
  std::vector<Int> r = a;
  const std::size_t db = b.size() - 1;
  Int q, rem;
  for (std::size_t i = a.size(); i-- > db;) {
    if (r[i] == 0) continue;
    mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), r[i].get_mpz_t(), b.back().get_mpz_t());
    if (rem != 0) return false;
    for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= q * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (r[i] != 0) return false;
  return true;
}

}  // namespace

u64 prime(std::size_t i) {
  static std::vector<u64> primes;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (primes.size() <= i) {
    Int start = primes.empty() ? Int(1) << 62 : Int(static_cast<unsigned long>(primes.back()));
    Int q = start - 1;
    while (mpz_probab_prime_p(q.get_mpz_t(), 30) == 0) q -= 1;
    primes.push_back(q.get_ui());
  }
  return primes[i];
}

u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p);
}

u64 inv(u64 a, u64 p) {
  u64 r = 1, e = p - 2;
  while (e) {
    if (e & 1U) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1U;
  }
  return r;
}

u64 to_mod(const Rat& r, u64 p, bool& ok) {
  Int pz = static_cast<unsigned long>(p), n, d;
  mpz_fdiv_r(n.get_mpz_t(), r.get_num_mpz_t(), pz.get_mpz_t());
  mpz_fdiv_r(d.get_mpz_t(), r.get_den_mpz_t(), pz.get_mpz_t());
  if (d == 0) {
    ok = false;
    return 0;
  }
  return mul(n.get_ui(), inv(d.get_ui(), p), p);
}

bool reduce(const UPoly& a, u64 p, Vec& out) {
  out.assign(a.coeffs().size(), 0);
  bool ok = true;
  for (std::size_t i = 0; i < out.size() && ok; ++i) out[i] = to_mod(a.coeffs()[i], p, ok);
  trim(out);
  return ok;
}

int degree(const Vec& a) { return a.empty() ? kNegInf : static_cast<int>(a.size()) - 1; }

u64 eval(const Vec& a, u64 t, u64 p) {
  u64 acc = 0;
  for (std::size_t i = a.size(); i-- > 0;) acc = (mul(acc, t, p) + a[i]) % p;
  return acc;
}

Vec gcd(Vec a, Vec b, u64 p) {
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    u64 il = inv(b.back(), p);
    while (a.size() >= b.size()) {
      u64 f = mul(a.back(), il, p);
      std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[off + j] = sub(a[off + j], mul(f, b[j], p), p);
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    u64 il = inv(a.back(), p);
    for (auto& c : a) c = mul(c, il, p);
  }
  return a;
}

UPoly gcd_q(const UPoly& a, const UPoly& b) {
  std::vector<Int> A = primitive_int(a), B = primitive_int(b);
  Int lg;
  mpz_gcd(lg.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());
  int best = std::min(a.degree(), b.degree()) + 1;
  std::vector<Int> acc, prev;
  Int modulus = 1;
  for (std::size_t k = 0;; ++k) {
    const u64 p = prime(k);
    Int pz = static_cast<unsigned long>(p);
    Vec ap = reduce_int(A, p), bp = reduce_int(B, p);
    if (degree(ap) != a.degree() || degree(bp) != b.degree()) continue;
    Vec g = gcd(ap, bp, p);
    const int dg = degree(g);
    if (dg == 0) return UPoly(Rat(1));
    if (dg > best) continue;
    Int lgm;
    mpz_fdiv_r(lgm.get_mpz_t(), lg.get_mpz_t(), pz.get_mpz_t());
    for (auto& c : g) c = mul(c, lgm.get_ui(), p);
    if (dg < best) {
      best = dg;
      acc.assign(g.size(), 0);
      for (std::size_t i = 0; i < g.size(); ++i) acc[i] = static_cast<unsigned long>(g[i]);
      modulus = pz;
      prev.clear();
      continue;
    }
    // combine: c + M * ((r - c) * M^{-1} mod p)
    Int minv, t;
    mpz_invert(minv.get_mpz_t(), modulus.get_mpz_t(), pz.get_mpz_t());
    for (std::size_t i = 0; i < g.size(); ++i) {
      t = Int(static_cast<unsigned long>(g[i])) - acc[i];
      t *= minv;
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), pz.get_mpz_t());
      acc[i] += modulus * t;
    }
    modulus *= pz;
    Int half = modulus / 2;
    std::vector<Int> sym = acc;
    for (auto& c : sym)
      if (c > half) c -= modulus;
    if (sym != prev) {
      prev = sym;
      continue;
    }
    Int cg = 0;
    for (const auto& c : sym) mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), c.get_mpz_t());
    for (auto& c : sym) c /= cg;
    if (divides_int(sym, A) && divides_int(sym, B)) {
      std::vector<Rat> r;
      for (const auto& c : sym) r.emplace_back(c);
      return UPoly(std::move(r)).monic();
    }
  }
}

}  // namespace hyperct::modp
