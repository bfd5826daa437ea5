#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace hyperct {

using Int = mpz_class;
using Rat = mpq_class;

/// Degree of the zero polynomial. Compares below every real degree and
/// survives small additive offsets without overflow.
inline constexpr int kNegInf = std::numeric_limits<int>::min() / 4;

std::string rat_to_string(const Rat& r);

/// Dense univariate polynomial over Q. Used for C[x] (PolyX) and, inside the
/// factorizer, for Q[y] after specialization.
class UPoly {
 public:
  UPoly() = default;
  UPoly(const Rat& c);  // NOLINT: constants convert implicitly
  UPoly(long c) : UPoly(Rat(c)) {}  // NOLINT
  explicit UPoly(std::vector<Rat> coeffs);

  static UPoly var();
  static UPoly monomial(const Rat& c, int k);
  /// (t + c)
  static UPoly linear(const Rat& slope, const Rat& c);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return c_.empty() ? kNegInf : static_cast<int>(c_.size()) - 1; }
  const Rat& coeff(int i) const;
  const Rat& lc() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  UPoly operator-() const;
  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  UPoly scaled(const Rat& s) const;
  UPoly monic() const;
  Rat eval(const Rat& t) const;
  /// p(t + k)
  UPoly shift(const Rat& k) const;
  /// p(a*t)
  UPoly scale_arg(const Rat& a) const;
  UPoly derivative() const;
  UPoly compose(const UPoly& inner) const;
  UPoly pow(unsigned e) const;

  /// lcm of coefficient denominators
  Int denominator_lcm() const;
  /// gcd of numerators after clearing denominators (positive)
  Rat content() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> c_;
};

std::pair<UPoly, UPoly> divrem(const UPoly& a, const UPoly& b);
/// Throws Error(NotExact) when b does not divide a.
UPoly exact_div(const UPoly& a, const UPoly& b);
bool divides(const UPoly& b, const UPoly& a);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly lcm(const UPoly& a, const UPoly& b);
/// Returns (g, s, t) with g = s*a + t*b, g monic.
std::tuple<UPoly, UPoly, UPoly> ext_gcd(const UPoly& a, const UPoly& b);

}  // namespace hyperct
