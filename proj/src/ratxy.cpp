#include "hyperct/ratxy.hpp"

#include <algorithm>
#include <array>

#include "hyperct/errors.hpp"
#include "hyperct/factor.hpp"

namespace hyperct {

namespace {

// scale so that all coefficients are integers with gcd 1
Rat integer_normalizer(const PolyXY& p) {
  Int l = 1, g = 0;
  for (const auto& c : p.coeffs())
    for (const auto& r : c.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  for (const auto& c : p.coeffs())
    for (const auto& r : c.coeffs()) {
      Int n = r.get_num() * (l / r.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
  if (g == 0) return Rat(1);
  Rat s(l, g);
  s.canonicalize();
  return s;
}

}  // namespace

RatXY::RatXY(const PolyY& n, const PolyY& d) {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator in C(x,y)");
  if (n.is_zero()) {
    den_ = PolyY(RatX(1));
    return;
  }
  if (d.degree() == 0) {
    num_ = n.scaled(d.lc().inverse());
    den_ = PolyY(RatX(1));
    return;
  }
  PolyY g = poly_gcd_y(n, d);
  PolyY nn = g.is_one() ? n : exact_div(n, g);
  PolyY dd = g.is_one() ? d : exact_div(d, g);
  RatX s = dd.lc().inverse();
  num_ = nn.scaled(s);
  den_ = dd.scaled(s);
}

RatXY RatXY::coprime(const PolyY& n, const PolyY& d) {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator in C(x,y)");
  RatXY r;
  if (n.is_zero()) return r;
  RatX s = d.lc().inverse();
  r.num_ = n.scaled(s);
  r.den_ = d.scaled(s);
  return r;
}

RatXY RatXY::operator-() const {
  RatXY r = *this;
  r.num_ = -r.num_;
  return r;
}

RatXY operator+(const RatXY& a, const RatXY& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) return RatXY(a.num_ + b.num_);
  if (a.den_ == b.den_) return RatXY(a.num_ + b.num_, a.den_);
  PolyY g = poly_gcd_y(a.den_, b.den_);
  if (g.is_one()) return RatXY(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  PolyY ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
  return RatXY(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatXY operator*(const RatXY& a, const RatXY& b) {
  if (a.is_zero() || b.is_zero()) return RatXY();
  if (a.den_.is_one() && b.den_.is_one()) return RatXY(a.num_ * b.num_);
  PolyY g1 = poly_gcd_y(a.num_, b.den_), g2 = poly_gcd_y(b.num_, a.den_);
  PolyY n1 = g1.is_one() ? a.num_ : exact_div(a.num_, g1);
  PolyY d2 = g1.is_one() ? b.den_ : exact_div(b.den_, g1);
  PolyY n2 = g2.is_one() ? b.num_ : exact_div(b.num_, g2);
  PolyY d1 = g2.is_one() ? a.den_ : exact_div(a.den_, g2);
  RatXY r;
  PolyY d = d1 * d2;
  RatX s = d.lc().inverse();
  r.num_ = (n1 * n2).scaled(s);
  r.den_ = d.scaled(s);
  return r;
}

RatXY RatXY::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in C(x,y)");
  RatXY r;
  RatX s = num_.lc().inverse();
  r.num_ = den_.scaled(s);
  r.den_ = num_.scaled(s);
  return r;
}

RatXY RatXY::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatXY r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

RatXY RatXY::shift(Var var, long k) const {
  return var == Var::X ? shift_x(Rat(k)) : shift_y(k);
}

RatXY RatXY::shift_x(const Rat& k) const {
  if (k == 0) return *this;
  RatXY r;
  r.num_ = num_.shift_x(k);
  r.den_ = den_.shift_x(k);
  return r;
}

RatXY RatXY::shift_y(long k) const {
  if (k == 0) return *this;
  RatXY r;
  r.num_ = num_.shift_y(k);
  r.den_ = den_.shift_y(k);
  return r;
}

Rat RatXY::eval(const Rat& x0, const Rat& y0) const {
  RatX n = num_.eval_y(RatX(y0)), d = den_.eval_y(RatX(y0));
  Rat dv = d.eval(x0);
  if (dv == 0) throw Error(ErrorCode::DivisionByZero, "evaluation at a pole");
  return n.eval(x0) / dv;
}

std::pair<PolyXY, PolyXY> RatXY::integral_parts() const {
  PolyXY dn = PolyXY::from_y(den_);
  // dn is den_ times an element of Q[x]
  PolyY q = exact_div(num_ * dn.to_y(), den_);
  PolyX dx(Rat(1));
  for (const auto& c : q.coeffs()) dx = lcm(dx, c.den());
  PolyXY n = PolyXY::from_y(q);
  PolyXY d = dn.scaled(dx);
  Rat s = integer_normalizer(d);
  if (d.lc().lc() * s < 0) s = -s;
  return {n.scaled(PolyX(s)), d.scaled(PolyX(s))};
}

std::string RatXY::to_string() const {
  if (den_.is_one()) return num_.to_string();
  auto [n, d] = integral_parts();
  std::string ns = n.to_string(), ds = d.to_string();
  return "(" + ns + ")/(" + ds + ")";
}

RatXY sum_rational(const std::vector<RatXY>& terms) {
  std::vector<std::pair<PolyY, int>> base;
  std::vector<std::vector<int>> mult;
  for (const auto& t : terms) {
    std::vector<int> m(base.size(), 0);
    if (!t.is_zero() && t.den().degree() > 0)
      for (const auto& [f, k] : factor_y(t.den()).factors) {
        auto it = std::find_if(base.begin(), base.end(), [&](const auto& b) { return b.first == f; });
        std::size_t j = static_cast<std::size_t>(it - base.begin());
        if (it == base.end()) {
          base.emplace_back(f, 0);
          m.push_back(0);
        }
        m[j] = k;
        base[j].second = std::max(base[j].second, k);
      }
    mult.push_back(std::move(m));
  }
  PolyY N;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].is_zero()) continue;
    PolyY c = terms[i].num();
    for (std::size_t j = 0; j < base.size(); ++j) {
      int k = base[j].second - (j < mult[i].size() ? mult[i][j] : 0);
      if (k > 0) c *= base[j].first.pow(k);
    }
    N += c;
  }
  if (N.is_zero()) return RatXY();
  PolyY D(RatX(1));
  for (auto& [f, k] : base) {
    while (k > 0) {
      auto [q, r] = divrem(N, f);
      if (!r.is_zero()) break;
      N = std::move(q);
      --k;
    }
    if (k > 0) D *= f.pow(k);
  }
  return RatXY::coprime(N, D);
}

bool fractions_sum_to_zero(const std::vector<Fraction>& terms) {
  std::vector<Fraction> g;
  for (const auto& [n, d] : terms) {
    if (n.is_zero()) continue;
    auto it = std::find_if(g.begin(), g.end(), [&](const Fraction& f) { return f.second == d; });
    if (it == g.end())
      g.emplace_back(n, d);
    else
      it->first += n;
  }
  std::size_t m = g.size();
  if (m == 0) return true;
  // Each n/d is (N*t)/(D*s) with N = s*n, D = t*d in Q[x][y] and s, t in Q[x];
  // every factor is scaled to Z[x][y] and the zero test runs on the Kronecker
  // images at x = 2^k, y = 2^(k*dx), injective for k above the coefficient bound.
  struct Factor {
    std::vector<std::vector<Int>> c;  // c[j][i]: coefficient of x^i y^j
    Int scale;                        // factor = c / scale
    int deg_x = 0;
    std::size_t norm_bits = 0;        // bits of the l1 norm
  };
  auto make = [](const PolyXY& p) {
    Factor f;
    f.scale = 1;
    for (const auto& cx : p.coeffs())
      for (const auto& r : cx.coeffs()) mpz_lcm(f.scale.get_mpz_t(), f.scale.get_mpz_t(), r.get_den_mpz_t());
    Int norm = 0;
    for (const auto& cx : p.coeffs()) {
      std::vector<Int> row;
      for (const auto& r : cx.coeffs()) {
        Int v = r.get_num() * (f.scale / r.get_den());
        norm += abs(v);
        row.push_back(std::move(v));
      }
      f.deg_x = std::max(f.deg_x, static_cast<int>(row.size()) - 1);
      f.c.push_back(std::move(row));
    }
    f.norm_bits = mpz_sizeinbase(norm.get_mpz_t(), 2);
    return f;
  };
  auto clear = [](const PolyY& p) {
    PolyX d(Rat(1));
    for (const auto& c : p.coeffs()) d = lcm(d, c.den());
    return std::make_pair(PolyXY::from_y(p), PolyXY({d}));
  };
  std::vector<std::array<Factor, 2>> num, den;
  for (const auto& [n, d] : g) {
    if (n.is_zero()) continue;
    auto [N, s] = clear(n);
    auto [D, t] = clear(d);
    num.push_back({make(N), make(t)});
    den.push_back({make(D), make(s)});
  }
  m = num.size();
  if (m == 0) return true;
  auto weight = [&](std::size_t i) {
    // product of the scales of the factors absent from term i
    Int w = den[i][0].scale * den[i][1].scale;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) w *= num[j][0].scale * num[j][1].scale;
    return w;
  };
  std::size_t bits = 0;
  int dx = 0;
  std::vector<Int> weights(m);
  for (std::size_t i = 0; i < m; ++i) {
    weights[i] = weight(i);
    std::size_t b = mpz_sizeinbase(weights[i].get_mpz_t(), 2) + num[i][0].norm_bits + num[i][1].norm_bits;
    int d = num[i][0].deg_x + num[i][1].deg_x;
    for (std::size_t j = 0; j < m; ++j)
      if (j != i) {
        b += den[j][0].norm_bits + den[j][1].norm_bits;
        d += den[j][0].deg_x + den[j][1].deg_x;
      }
    bits = std::max(bits, b);
    dx = std::max({dx, d, den[i][0].deg_x, den[i][1].deg_x});
  }
  const unsigned long k = bits + mpz_sizeinbase(Int(m).get_mpz_t(), 2) + 2;
  const long slots = dx + 1;
  auto image = [&](const Factor& f) {
    Int v = 0;
    for (std::size_t j = f.c.size(); j-- > 0;) {
      mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), k * static_cast<unsigned long>(slots - static_cast<long>(f.c[j].size())));
      for (std::size_t i = f.c[j].size(); i-- > 0;) {
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), k);
        v += f.c[j][i];
      }
    }
    return v;
  };
  std::vector<Int> nimg(m), dimg(m);
  for (std::size_t i = 0; i < m; ++i) {
    nimg[i] = image(num[i][0]) * image(num[i][1]);
    dimg[i] = image(den[i][0]) * image(den[i][1]);
  }
  std::vector<Int> suffix(m + 1, Int(1));
  for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * dimg[i];
  Int prefix = 1, total = 0;
  for (std::size_t i = 0; i < m; ++i) {
    total += weights[i] * nimg[i] * prefix * suffix[i + 1];
    prefix *= dimg[i];
  }
  return total == 0;
}

}  // namespace hyperct
