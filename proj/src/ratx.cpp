#include "hyperct/ratx.hpp"

#include "hyperct/errors.hpp"

namespace hyperct {

RatX::RatX(const PolyX& n, const PolyX& d) {
  if (d.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator in C(x)");
  if (n.is_zero()) {
    den_ = PolyX(Rat(1));
    return;
  }
  if (d.degree() == 0) {
    num_ = n.scaled(Rat(1) / d.lc());
    den_ = PolyX(Rat(1));
    return;
  }
  PolyX g = gcd(n, d);
  PolyX nn = g.is_one() ? n : exact_div(n, g);
  PolyX dd = g.is_one() ? d : exact_div(d, g);
  Rat s = Rat(1) / dd.lc();
  num_ = nn.scaled(s);
  den_ = dd.scaled(s);
}

std::optional<Rat> RatX::as_constant() const {
  if (!is_constant()) return std::nullopt;
  return num_.coeff(0);
}

RatX RatX::operator-() const {
  RatX r = *this;
  r.num_ = -r.num_;
  return r;
}

RatX operator+(const RatX& a, const RatX& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) {
    RatX r;
    r.num_ = a.num_ + b.num_;
    return r;
  }
  if (a.den_ == b.den_) return RatX(a.num_ + b.num_, a.den_);
  PolyX g = gcd(a.den_, b.den_);
  if (g.is_one()) return RatX(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  PolyX ad = exact_div(a.den_, g), bd = exact_div(b.den_, g);
  return RatX(a.num_ * bd + b.num_ * ad, ad * b.den_);
}

RatX operator*(const RatX& a, const RatX& b) {
  if (a.is_zero() || b.is_zero()) return RatX();
  if (a.den_.is_one() && b.den_.is_one()) {
    RatX r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  // cross-cancel so that the product is already reduced
  PolyX g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
  PolyX n1 = g1.is_one() ? a.num_ : exact_div(a.num_, g1);
  PolyX d2 = g1.is_one() ? b.den_ : exact_div(b.den_, g1);
  PolyX n2 = g2.is_one() ? b.num_ : exact_div(b.num_, g2);
  PolyX d1 = g2.is_one() ? a.den_ : exact_div(a.den_, g2);
  RatX r;
  PolyX d = d1 * d2;
  Rat s = Rat(1) / d.lc();
  r.num_ = (n1 * n2).scaled(s);
  r.den_ = d.scaled(s);
  return r;
}

RatX RatX::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in C(x)");
  RatX r;
  Rat s = Rat(1) / num_.lc();
  r.num_ = den_.scaled(s);
  r.den_ = num_.scaled(s);
  return r;
}

RatX RatX::shift(const Rat& k) const {
  if (k == 0 || is_constant()) return *this;
  RatX r;
  r.num_ = num_.shift(k);
  r.den_ = den_.shift(k);
  return r;
}

RatX RatX::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  RatX r;
  r.num_ = num_.pow(static_cast<unsigned>(e));
  r.den_ = den_.pow(static_cast<unsigned>(e));
  return r;
}

Rat RatX::eval(const Rat& t) const {
  Rat d = den_.eval(t);
  if (d == 0) throw Error(ErrorCode::DivisionByZero, "evaluation at a pole");
  return num_.eval(t) / d;
}

std::string RatX::to_string() const {
  if (den_.is_one()) return num_.to_string("x");
  return "(" + num_.to_string("x") + ")/(" + den_.to_string("x") + ")";
}

}  // namespace hyperct
