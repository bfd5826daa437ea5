#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hyperct/ratx.hpp"

namespace hyperct {

class PolyXY;

/// Polynomial in y with coefficients in C(x). Recursive representation:
/// every computation in this library is y-directional with x a parameter.
class PolyY {
 public:
  PolyY() = default;
  PolyY(const RatX& c);  // NOLINT
  PolyY(long c) : PolyY(RatX(c)) {}  // NOLINT
  explicit PolyY(std::vector<RatX> coeffs);

  static PolyY y();
  static PolyY monomial(const RatX& c, int k);
  /// lambda*x + mu*y + c
  static PolyY linear(const Rat& lambda, const Rat& mu, const Rat& c);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  int degree() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  const RatX& coeff(int i) const;
  const RatX& lc() const;
  const std::vector<RatX>& coeffs() const { return c_; }
  /// all coefficients are polynomials in x
  bool has_polynomial_coeffs() const;

  PolyY operator-() const;
  PolyY& operator+=(const PolyY& o);
  PolyY& operator-=(const PolyY& o);
  PolyY& operator*=(const PolyY& o) { return *this = *this * o; }
  friend PolyY operator+(PolyY a, const PolyY& b) { return a += b; }
  friend PolyY operator-(PolyY a, const PolyY& b) { return a -= b; }
  friend PolyY operator*(const PolyY& a, const PolyY& b);
  friend bool operator==(const PolyY& a, const PolyY& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyY& a, const PolyY& b) { return !(a == b); }

  PolyY scaled(const RatX& s) const;
  PolyY monic() const;
  PolyY pow(unsigned e) const;
  /// y -> y + k
  PolyY shift_y(long k) const;
  /// x -> x + k
  PolyY shift_x(const Rat& k) const;
  PolyY derivative() const;
  /// Specialize x = t. Denominators must not vanish at t.
  UPoly eval_x(const Rat& t) const;
  RatX eval_y(const RatX& t) const;

  /// Canonical expanded text: N(x,y) or (N(x,y))/(d(x)).
  std::string to_string() const;

 private:
  void trim();
  std::vector<RatX> c_;
};

std::pair<PolyY, PolyY> divrem(const PolyY& a, const PolyY& b);
PolyY exact_div(const PolyY& a, const PolyY& b);
bool divides(const PolyY& b, const PolyY& a);
/// Monic gcd over C(x); gcd(0, 0) = 0.
PolyY poly_gcd_y(const PolyY& a, const PolyY& b);
PolyY lcm(const PolyY& a, const PolyY& b);
/// (g, s, t) with g = s*a + t*b monic
std::tuple<PolyY, PolyY, PolyY> ext_gcd(const PolyY& a, const PolyY& b);
/// Inverse of a modulo m (gcd must be 1).
PolyY inverse_mod(const PolyY& a, const PolyY& m);
/// Sylvester resultant with respect to y. Throws ZeroInput on zero input.
RatX resultant_y(const PolyY& a, const PolyY& b);

/// Q[x][y] with polynomial coefficients, indexed by y-degree. Working form
/// for pseudo-remainder gcds, factorization and integer-linear tests.
class PolyXY {
 public:
  PolyXY() = default;
  explicit PolyXY(std::vector<PolyX> coeffs);

  /// Clears x-denominators of p (result is p times a nonzero element of Q[x]).
  static PolyXY from_y(const PolyY& p);
  PolyY to_y() const;

  bool is_zero() const { return c_.empty(); }
  int degree_y() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  int degree_x() const;
  int total_degree() const;
  const PolyX& coeff(int i) const;
  const PolyX& lc() const;
  const std::vector<PolyX>& coeffs() const { return c_; }
  /// coefficient of x^i y^j
  Rat coeff(int i, int j) const { return coeff(j).coeff(i); }

  PolyXY operator-() const;
  friend PolyXY operator+(const PolyXY& a, const PolyXY& b);
  friend PolyXY operator-(const PolyXY& a, const PolyXY& b) { return a + (-b); }
  friend PolyXY operator*(const PolyXY& a, const PolyXY& b);
  friend bool operator==(const PolyXY& a, const PolyXY& b) { return a.c_ == b.c_; }
  friend bool operator!=(const PolyXY& a, const PolyXY& b) { return !(a == b); }

  PolyXY scaled(const PolyX& s) const;
  /// gcd of the x-coefficients, monic
  PolyX content_x() const;
  /// Divides out content_x and the rational content; leading numeric
  /// coefficient (lex y > x) is made positive.
  PolyXY primitive() const;
  PolyXY shift_y(const Rat& k) const;
  PolyXY shift_x(const Rat& k) const;
  /// p(x + a, y + b)
  PolyXY shift(const Rat& a, const Rat& b) const;
  PolyXY derivative_y() const;
  UPoly eval_x(const Rat& t) const;
  /// Swap the roles of x and y.
  PolyXY transpose() const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<PolyX> c_;
};

/// Pseudo-remainder in y.
PolyXY prem(const PolyXY& a, const PolyXY& b);
/// Primitive gcd in Q[x][y] (up to a unit of Q).
PolyXY gcd_xy(const PolyXY& a, const PolyXY& b);
/// Exact division in Q[x][y]; nullopt-like failure is signalled by ok=false.
bool try_divide_xy(const PolyXY& a, const PolyXY& b, PolyXY& quotient);

}  // namespace hyperct
