#include "hyperct/upoly.hpp"

#include <sstream>

#include "hyperct/errors.hpp"
#include "modular.hpp"

namespace hyperct {

namespace {
const Rat kZero(0);
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

UPoly::UPoly(const Rat& c) {
  if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::var() { return monomial(Rat(1), 1); }

UPoly UPoly::monomial(const Rat& c, int k) {
  UPoly p;
  if (c == 0) return p;
  p.c_.assign(static_cast<std::size_t>(k) + 1, Rat(0));
  p.c_.back() = c;
  return p;
}

UPoly UPoly::linear(const Rat& slope, const Rat& c) { return UPoly(std::vector<Rat>{c, slope}); }

void UPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<std::size_t>(i)];
}

const Rat& UPoly::lc() const { return c_.empty() ? kZero : c_.back(); }

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rat(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  UPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  // integer products over a common denominator, one canonicalization per coefficient
  auto integral = [](const std::vector<Rat>& c, Int& den) {
    den = 1;
    for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    std::vector<Int> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
      mpz_divexact(out[i].get_mpz_t(), den.get_mpz_t(), c[i].get_den_mpz_t());
      out[i] *= c[i].get_num();
    }
    return out;
  };
  Int da, db;
  std::vector<Int> A = integral(a.c_, da), B = integral(b.c_, db);
  std::vector<Int> acc(A.size() + B.size() - 1, Int(0));
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i] == 0) continue;
    for (std::size_t j = 0; j < B.size(); ++j)
      mpz_addmul(acc[i + j].get_mpz_t(), A[i].get_mpz_t(), B[j].get_mpz_t());
  }
  Int d = da * db;
  r.c_.resize(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) {
    r.c_[k] = Rat(acc[k], d);
    r.c_[k].canonicalize();
  }
  r.trim();
  return r;
}

UPoly UPoly::scaled(const Rat& s) const {
  if (s == 0) return UPoly();
  UPoly r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

UPoly UPoly::monic() const {
  if (is_zero() || lc() == 1) return *this;
  return scaled(Rat(1) / lc());
}

Rat UPoly::eval(const Rat& t) const {
  Rat acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + c_[i];
  return acc;
}

UPoly UPoly::shift(const Rat& k) const {
  if (k == 0 || c_.size() <= 1) return *this;
  // Horner: r = r * (t + k) + c_i
  std::vector<Rat> r;
  for (std::size_t i = c_.size(); i-- > 0;) {
    r.push_back(Rat(0));
    for (std::size_t j = r.size() - 1; j > 0; --j) r[j] = r[j - 1] + k * r[j];
    r[0] = k * r[0] + c_[i];
  }
  return UPoly(std::move(r));
}

UPoly UPoly::scale_arg(const Rat& a) const {
  UPoly r = *this;
  Rat p(1);
  for (auto& c : r.c_) {
    c *= p;
    p *= a;
  }
  r.trim();
  return r;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rat> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return UPoly(std::move(r));
}

UPoly UPoly::compose(const UPoly& inner) const {
  UPoly acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * inner + UPoly(c_[i]);
  return acc;
}

UPoly UPoly::pow(unsigned e) const {
  UPoly result(Rat(1)), base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

Int UPoly::denominator_lcm() const {
  Int l = 1;
  for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Rat UPoly::content() const {
  if (c_.empty()) return Rat(0);
  Int l = denominator_lcm();
  Int g = 0;
  for (const auto& c : c_) {
    Int n = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  Rat r(g, l);
  r.canonicalize();
  return r;
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const Rat& c = c_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << rat_to_string(a);
      continue;
    }
    if (a != 1) os << rat_to_string(a) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rat> r = a.coeffs();
  const int db = b.degree();
  std::vector<Rat> q(static_cast<std::size_t>(a.degree() - db) + 1, Rat(0));
  const Rat inv = Rat(1) / b.lc();
  for (int i = a.degree(); i >= db; --i) {
    const Rat& top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rat f = top * inv;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * b.coeff(j);
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly exact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = divrem(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::NotExact, "inexact polynomial division");
  return q;
}

bool divides(const UPoly& b, const UPoly& a) {
  if (b.is_zero()) return a.is_zero();
  return divrem(a, b).second.is_zero();
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return UPoly(Rat(1));
  if (b.degree() == 1) return divides(b, a) ? b.monic() : UPoly(Rat(1));
  if (a.degree() == 1) return divides(a, b) ? a.monic() : UPoly(Rat(1));
  return modp::gcd_q(a, b);
}

UPoly lcm(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  return (exact_div(a, gcd(a, b)) * b).monic();
}

std::tuple<UPoly, UPoly, UPoly> ext_gcd(const UPoly& a, const UPoly& b) {
  UPoly r0 = a, r1 = b, s0(Rat(1)), s1, t0, t1(Rat(1));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s2 = s0 - q * s1;
    UPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Rat inv = Rat(1) / r0.lc();
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

}  // namespace hyperct
