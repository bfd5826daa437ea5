#include "hyperct/polyy.hpp"

#include <algorithm>
#include <sstream>

#include "hyperct/errors.hpp"
#include "modular.hpp"

namespace hyperct {

namespace {
const RatX kZeroX;
const PolyX kZeroP;

std::string monomial_string(const Rat& c, int i, int j, bool first) {
  std::ostringstream os;
  Rat a = abs(c);
  if (first) {
    if (c < 0) os << "-";
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  bool need_star = false;
  if (a != 1 || (i == 0 && j == 0)) {
    os << rat_to_string(a);
    need_star = true;
  }
  if (i > 0) {
    if (need_star) os << "*";
    os << "x";
    if (i > 1) os << "^" << i;
    need_star = true;
  }
  if (j > 0) {
    if (need_star) os << "*";
    os << "y";
    if (j > 1) os << "^" << j;
  }
  return os.str();
}
}  // namespace

// ---------------------------------------------------------------- PolyY

PolyY::PolyY(const RatX& c) {
  if (!c.is_zero()) c_.push_back(c);
}

PolyY::PolyY(std::vector<RatX> coeffs) : c_(std::move(coeffs)) { trim(); }

PolyY PolyY::y() { return monomial(RatX(1), 1); }

PolyY PolyY::monomial(const RatX& c, int k) {
  PolyY p;
  if (c.is_zero()) return p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, RatX());
  p.c_.back() = c;
  return p;
}

PolyY PolyY::linear(const Rat& lambda, const Rat& mu, const Rat& c) {
  return PolyY(std::vector<RatX>{RatX(PolyX::linear(lambda, c)), RatX(mu)});
}

void PolyY::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const RatX& PolyY::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroX;
  return c_[static_cast<std::size_t>(i)];
}

const RatX& PolyY::lc() const { return c_.empty() ? kZeroX : c_.back(); }

bool PolyY::has_polynomial_coeffs() const {
  return std::all_of(c_.begin(), c_.end(), [](const RatX& c) { return c.is_polynomial(); });
}

PolyY PolyY::operator-() const {
  PolyY r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyY& PolyY::operator+=(const PolyY& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyY& PolyY::operator-=(const PolyY& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyY operator*(const PolyY& a, const PolyY& b) {
  PolyY r;
  if (a.is_zero() || b.is_zero()) return r;
  if (a.has_polynomial_coeffs() && b.has_polynomial_coeffs()) {
    std::vector<PolyX> acc(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        acc[i + j] += a.c_[i].num() * b.c_[j].num();
    }
    r.c_.reserve(acc.size());
    for (auto& p : acc) r.c_.emplace_back(std::move(p));
    r.trim();
    return r;
  }
  // multiply over common x-denominators, then one reduction per coefficient
  auto cleared = [](const std::vector<RatX>& c, PolyX& den) {
    den = PolyX(Rat(1));
    for (const auto& q : c)
      if (!q.den().is_one() && q.den() != den) den = lcm(den, q.den());
    std::vector<PolyX> out;
    out.reserve(c.size());
    for (const auto& q : c) out.push_back(q.den() == den ? q.num() : q.num() * exact_div(den, q.den()));
    return out;
  };
  PolyX da, db;
  std::vector<PolyX> A = cleared(a.c_, da), B = cleared(b.c_, db);
  std::vector<PolyX> acc(A.size() + B.size() - 1);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i].is_zero()) continue;
    for (std::size_t j = 0; j < B.size(); ++j) acc[i + j] += A[i] * B[j];
  }
  PolyX d = da * db;
  r.c_.reserve(acc.size());
  for (auto& p : acc) r.c_.emplace_back(p, d);
  r.trim();
  return r;
}

PolyY PolyY::scaled(const RatX& s) const {
  if (s.is_zero()) return PolyY();
  if (s.is_one()) return *this;
  PolyY r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

PolyY PolyY::monic() const {
  if (is_zero() || lc().is_one()) return *this;
  return scaled(lc().inverse());
}

PolyY PolyY::pow(unsigned e) const {
  PolyY result(RatX(1)), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

PolyY PolyY::shift_y(long k) const {
  if (k == 0 || c_.size() <= 1) return *this;
  if (has_polynomial_coeffs()) {
    std::vector<PolyX> cs;
    cs.reserve(c_.size());
    for (const auto& c : c_) cs.push_back(c.num());
    return PolyXY(std::move(cs)).shift_y(Rat(k)).to_y();
  }
  PolyX d = PolyX(Rat(1));
  for (const auto& c : c_) d = lcm(d, c.den());
  PolyXY n = PolyXY::from_y(*this).shift_y(Rat(k));
  PolyY r = n.to_y();
  return r.scaled(RatX(PolyX(Rat(1)), d));
}

PolyY PolyY::shift_x(const Rat& k) const {
  if (k == 0) return *this;
  PolyY r = *this;
  for (auto& c : r.c_) c = c.shift(k);
  return r;
}

PolyY PolyY::derivative() const {
  if (c_.size() <= 1) return PolyY();
  std::vector<RatX> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * RatX(static_cast<long>(i));
  return PolyY(std::move(r));
}

UPoly PolyY::eval_x(const Rat& t) const {
  std::vector<Rat> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.eval(t));
  return UPoly(std::move(r));
}

RatX PolyY::eval_y(const RatX& t) const {
  RatX acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

std::string PolyY::to_string() const {
  if (is_zero()) return "0";
  PolyX d(Rat(1));
  for (const auto& c : c_) d = lcm(d, c.den());
  PolyXY n = PolyXY::from_y(*this);
  // from_y scales by the same lcm of denominators
  if (d.is_one()) return n.to_string();
  return "(" + n.to_string() + ")/(" + d.to_string("x") + ")";
}

std::pair<PolyY, PolyY> divrem(const PolyY& a, const PolyY& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero in C(x)[y]");
  if (a.degree() < b.degree()) return {PolyY(), a};
  std::vector<RatX> r = a.coeffs();
  const int db = b.degree();
  std::vector<RatX> q(static_cast<std::size_t>(a.degree() - db) + 1);
  const RatX inv = b.lc().inverse();
  for (int i = a.degree(); i >= db; --i) {
    const RatX top = r[static_cast<std::size_t>(i)];
    if (top.is_zero()) continue;
    RatX f = top * inv;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j < db; ++j) {
      const RatX& bj = b.coeff(j);
      if (!bj.is_zero()) r[static_cast<std::size_t>(i - db + j)] -= f * bj;
    }
    r[static_cast<std::size_t>(i)] = RatX();
  }
  r.resize(static_cast<std::size_t>(db));
  return {PolyY(std::move(q)), PolyY(std::move(r))};
}

PolyY exact_div(const PolyY& a, const PolyY& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::NotExact, "inexact division in C(x)[y]");
  return q;
}

bool divides(const PolyY& b, const PolyY& a) {
  if (b.is_zero()) return a.is_zero();
  if (b.degree() == 0) return true;
  return divrem(a, b).second.is_zero();
}

PolyY poly_gcd_y(const PolyY& a, const PolyY& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return PolyY(RatX(1));
  if (b.degree() == 1) return divides(b, a) ? b.monic() : PolyY(RatX(1));
  if (a.degree() == 1) return divides(a, b) ? a.monic() : PolyY(RatX(1));
  if (a == b) return a.monic();
  PolyXY g = gcd_xy(PolyXY::from_y(a), PolyXY::from_y(b));
  if (g.degree_y() <= 0) return PolyY(RatX(1));
  return g.to_y().monic();
}

PolyY lcm(const PolyY& a, const PolyY& b) {
  if (a.is_zero() || b.is_zero()) return PolyY();
  return (exact_div(a, poly_gcd_y(a, b)) * b).monic();
}

std::tuple<PolyY, PolyY, PolyY> ext_gcd(const PolyY& a, const PolyY& b) {
  PolyY r0 = a, r1 = b, s0(RatX(1)), s1, t0, t1(RatX(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    PolyY s2 = s0 - q * s1;
    PolyY t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  RatX inv = r0.lc().inverse();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

PolyY inverse_mod(const PolyY& a, const PolyY& m) {
  auto [g, s, t] = ext_gcd(divrem(a, m).second, m);
  if (g.degree() != 0) throw Error(ErrorCode::Internal, "inverse_mod: not coprime");
  return divrem(s, m).second;
}

RatX resultant_y(const PolyY& a, const PolyY& b) {
  if (a.is_zero() || b.is_zero()) throw Error(ErrorCode::ZeroInput, "resultant of zero polynomial");
  const int m = a.degree(), n = b.degree();
  if (m == 0 && n == 0) return RatX(1);
  if (m == 0) return a.lc().pow(n);
  if (n == 0) return b.lc().pow(m);
  const int size = m + n;
  std::vector<std::vector<RatX>> s(static_cast<std::size_t>(size),
                                   std::vector<RatX>(static_cast<std::size_t>(size)));
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = a.coeff(m - j);
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + j)] = b.coeff(n - j);
  RatX det(1);
  for (int c = 0; c < size; ++c) {
    int piv = -1;
    for (int r = c; r < size; ++r)
      if (!s[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) return RatX();
    if (piv != c) {
      std::swap(s[static_cast<std::size_t>(piv)], s[static_cast<std::size_t>(c)]);
      det = -det;
    }
    const auto& prow = s[static_cast<std::size_t>(c)];
    det *= prow[static_cast<std::size_t>(c)];
    RatX inv = prow[static_cast<std::size_t>(c)].inverse();
    for (int r = c + 1; r < size; ++r) {
      auto& row = s[static_cast<std::size_t>(r)];
      if (row[static_cast<std::size_t>(c)].is_zero()) continue;
      RatX f = row[static_cast<std::size_t>(c)] * inv;
      for (int j = c; j < size; ++j)
        if (!prow[static_cast<std::size_t>(j)].is_zero())
          row[static_cast<std::size_t>(j)] -= f * prow[static_cast<std::size_t>(j)];
    }
  }
  return det;
}

// ---------------------------------------------------------------- PolyXY

PolyXY::PolyXY(std::vector<PolyX> coeffs) : c_(std::move(coeffs)) { trim(); }

void PolyXY::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyXY PolyXY::from_y(const PolyY& p) {
  PolyX d(Rat(1));
  for (const auto& c : p.coeffs()) d = lcm(d, c.den());
  std::vector<PolyX> cs;
  cs.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (c.is_zero())
      cs.emplace_back();
    else
      cs.push_back(c.num() * exact_div(d, c.den()));
  }
  return PolyXY(std::move(cs));
}

PolyY PolyXY::to_y() const {
  std::vector<RatX> cs;
  cs.reserve(c_.size());
  for (const auto& c : c_) cs.emplace_back(c);
  return PolyY(std::move(cs));
}

int PolyXY::degree_x() const {
  int d = kNegInf;
  for (const auto& c : c_) d = std::max(d, c.degree());
  return d;
}

int PolyXY::total_degree() const {
  int d = kNegInf;
  for (std::size_t j = 0; j < c_.size(); ++j)
    if (!c_[j].is_zero()) d = std::max(d, c_[j].degree() + static_cast<int>(j));
  return d;
}

const PolyX& PolyXY::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroP;
  return c_[static_cast<std::size_t>(i)];
}

const PolyX& PolyXY::lc() const { return c_.empty() ? kZeroP : c_.back(); }

PolyXY PolyXY::operator-() const {
  PolyXY r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

PolyXY operator+(const PolyXY& a, const PolyXY& b) {
  std::vector<PolyX> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return PolyXY(std::move(r));
}

PolyXY operator*(const PolyXY& a, const PolyXY& b) {
  if (a.is_zero() || b.is_zero()) return PolyXY();
  std::vector<PolyX> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return PolyXY(std::move(r));
}

PolyXY PolyXY::scaled(const PolyX& s) const {
  if (s.is_zero()) return PolyXY();
  PolyXY r = *this;
  for (auto& c : r.c_) c = c * s;
  return r;
}

PolyX PolyXY::content_x() const {
  PolyX g;
  for (const auto& c : c_) {
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

PolyXY PolyXY::primitive() const {
  if (is_zero()) return *this;
  PolyX cont = content_x();
  std::vector<PolyX> cs;
  cs.reserve(c_.size());
  for (const auto& c : c_) cs.push_back(cont.is_one() ? c : exact_div(c, cont));
  // rational content
  Int l = 1;
  for (const auto& c : cs)
    for (const auto& r : c.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r.get_den_mpz_t());
  Int g = 0;
  for (const auto& c : cs)
    for (const auto& r : c.coeffs()) {
      Int n = r.get_num() * (l / r.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
  Rat s(l, g);
  s.canonicalize();
  if (cs.back().lc() < 0) s = -s;
  for (auto& c : cs) c = c.scaled(s);
  return PolyXY(std::move(cs));
}

PolyXY PolyXY::shift_y(const Rat& k) const {
  if (k == 0 || c_.size() <= 1) return *this;
  std::vector<PolyX> r;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r.emplace_back();
    for (std::size_t j = r.size() - 1; j > 0; --j) r[j] = r[j - 1] + r[j].scaled(k);
    r[0] = r[0].scaled(k) + c_[i];
  }
  return PolyXY(std::move(r));
}

PolyXY PolyXY::shift_x(const Rat& k) const {
  if (k == 0) return *this;
  PolyXY r = *this;
  for (auto& c : r.c_) c = c.shift(k);
  return r;
}

PolyXY PolyXY::shift(const Rat& a, const Rat& b) const { return shift_x(a).shift_y(b); }

PolyXY PolyXY::derivative_y() const {
  if (c_.size() <= 1) return PolyXY();
  std::vector<PolyX> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i].scaled(Rat(static_cast<long>(i)));
  return PolyXY(std::move(r));
}

UPoly PolyXY::eval_x(const Rat& t) const {
  std::vector<Rat> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.push_back(c.eval(t));
  return UPoly(std::move(r));
}

PolyXY PolyXY::transpose() const {
  int dx = degree_x();
  if (dx < 0) return *this;
  std::vector<std::vector<Rat>> t(static_cast<std::size_t>(dx) + 1,
                                  std::vector<Rat>(c_.size(), Rat(0)));
  for (std::size_t j = 0; j < c_.size(); ++j)
    for (int i = 0; i <= c_[j].degree(); ++i) t[static_cast<std::size_t>(i)][j] = c_[j].coeff(i);
  std::vector<PolyX> r;
  r.reserve(t.size());
  for (auto& row : t) r.emplace_back(std::move(row));
  return PolyXY(std::move(r));
}

std::string PolyXY::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int j = degree_y(); j >= 0; --j) {
    const PolyX& c = coeff(j);
    for (int i = c.degree(); i >= 0; --i) {
      if (c.coeff(i) == 0) continue;
      s += monomial_string(c.coeff(i), i, j, first);
      first = false;
    }
  }
  return s;
}

PolyXY prem(const PolyXY& a, const PolyXY& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "prem by zero");
  PolyXY r = a;
  const int db = b.degree_y();
  const PolyX lb = b.lc();
  while (!r.is_zero() && r.degree_y() >= db) {
    const int k = r.degree_y() - db;
    std::vector<PolyX> shift(static_cast<std::size_t>(k) + 1);
    shift.back() = r.lc();
    PolyXY t = PolyXY(std::move(shift)) * b;
    r = r.scaled(lb) - t;
  }
  return r;
}

namespace {

// Upper bound for deg_y gcd(a, b) from one modular image at x = x0.
// Returns -1 when no admissible image was found.
int gcd_degree_bound(const PolyXY& a, const PolyXY& b) {
  using namespace modp;
  for (std::size_t k = 0; k < 3; ++k) {
    const u64 p = prime(k);
    std::vector<Vec> ai, bi;
    bool ok = true;
    for (const auto& c : a.coeffs()) {
      ai.emplace_back();
      ok = ok && reduce(c, p, ai.back());
    }
    for (const auto& c : b.coeffs()) {
      bi.emplace_back();
      ok = ok && reduce(c, p, bi.back());
    }
    if (!ok) continue;
    for (u64 x0 = 12345 + 977 * k; x0 < 12345 + 977 * k + 5; ++x0) {
      if (eval(ai.back(), x0, p) == 0 || eval(bi.back(), x0, p) == 0) continue;
      Vec av, bv;
      for (const auto& c : ai) av.push_back(eval(c, x0, p));
      for (const auto& c : bi) bv.push_back(eval(c, x0, p));
      return degree(gcd(av, bv, p));
    }
  }
  return -1;
}

}  // namespace

PolyXY gcd_xy(const PolyXY& a, const PolyXY& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  PolyX cg = gcd(a.content_x(), b.content_x());
  PolyXY p = a.primitive(), q = b.primitive();
  if (p.degree_y() < q.degree_y()) std::swap(p, q);
  if (q.degree_y() > 0) {
    const int bound = gcd_degree_bound(p, q);
    if (bound == 0) return PolyXY({cg});
    PolyXY quo;
    if (bound == q.degree_y() && try_divide_xy(p, q, quo)) return q.scaled(cg);
  }
  while (!q.is_zero() && q.degree_y() > 0) {
    PolyXY r = prem(p, q);
    p = std::move(q);
    q = r.is_zero() ? r : r.primitive();
  }
  if (!q.is_zero()) return PolyXY({cg});  // q is a nonzero element of Q[x]: coprime
  return p.scaled(cg);
}

bool try_divide_xy(const PolyXY& a, const PolyXY& b, PolyXY& quotient) {
  if (b.is_zero()) return false;
  std::vector<PolyX> q(a.degree_y() >= b.degree_y()
                           ? static_cast<std::size_t>(a.degree_y() - b.degree_y()) + 1
                           : 0);
  PolyXY r = a;
  const int db = b.degree_y();
  while (!r.is_zero() && r.degree_y() >= db) {
    auto [c, rem] = divrem(r.lc(), b.lc());
    if (!rem.is_zero()) return false;
    const int k = r.degree_y() - db;
    q[static_cast<std::size_t>(k)] = c;
    std::vector<PolyX> mono(static_cast<std::size_t>(k) + 1);
    mono.back() = c;
    PolyXY t = PolyXY(std::move(mono)) * b;
    PolyXY nr = r - t;
    if (!nr.is_zero() && nr.degree_y() >= r.degree_y()) return false;
    r = std::move(nr);
  }
  if (!r.is_zero()) return false;
  quotient = PolyXY(std::move(q));
  return true;
}

}  // namespace hyperct
