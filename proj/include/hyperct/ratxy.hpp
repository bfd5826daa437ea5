#pragma once

#include <string>
#include <vector>

#include "hyperct/polyy.hpp"

namespace hyperct {

enum class Var { X, Y };

/// Element of C(x,y) as num/den in C(x)[y]: gcd 1, den monic in y.
class RatXY {
 public:
  RatXY() : den_(RatX(1)) {}
  RatXY(const Rat& c) : num_(RatX(c)), den_(RatX(1)) {}  // NOLINT
  RatXY(long c) : RatXY(Rat(c)) {}                       // NOLINT
  RatXY(const RatX& c) : num_(c), den_(RatX(1)) {}       // NOLINT
  RatXY(PolyY n) : num_(std::move(n)), den_(RatX(1)) {}  // NOLINT
  RatXY(const PolyY& n, const PolyY& d);
  /// n/d with gcd(n, d) = 1 already known.
  static RatXY coprime(const PolyY& n, const PolyY& d);

  static RatXY x() { return RatXY(RatX::x()); }
  static RatXY y() { return RatXY(PolyY::y()); }

  const PolyY& num() const { return num_; }
  const PolyY& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial_y() const { return den_.is_one(); }

  RatXY operator-() const;
  RatXY& operator+=(const RatXY& o) { return *this = *this + o; }
  RatXY& operator-=(const RatXY& o) { return *this = *this - o; }
  RatXY& operator*=(const RatXY& o) { return *this = *this * o; }
  RatXY& operator/=(const RatXY& o) { return *this = *this / o; }
  friend RatXY operator+(const RatXY& a, const RatXY& b);
  friend RatXY operator-(const RatXY& a, const RatXY& b) { return a + (-b); }
  friend RatXY operator*(const RatXY& a, const RatXY& b);
  friend RatXY operator/(const RatXY& a, const RatXY& b) { return a * b.inverse(); }
  friend bool operator==(const RatXY& a, const RatXY& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatXY& a, const RatXY& b) { return !(a == b); }

  RatXY inverse() const;
  RatXY pow(int e) const;
  RatXY shift(Var var, long k) const;
  RatXY shift_x(const Rat& k) const;
  RatXY shift_y(long k) const;
  /// Numeric value at (x0, y0); throws DivisionByZero at a pole.
  Rat eval(const Rat& x0, const Rat& y0) const;

  /// Fraction N/D with N, D in Q[x][y] coprime, D with integer primitive
  /// coefficients and positive leading coefficient.
  std::pair<PolyXY, PolyXY> integral_parts() const;
  std::string to_string() const;

 private:
  PolyY num_, den_;
};

using Fraction = std::pair<PolyY, PolyY>;

/// Sum of the terms, cancelled against the factors of the denominators
/// instead of a full gcd.
RatXY sum_rational(const std::vector<RatXY>& terms);

/// True iff sum n_i/d_i vanishes; no gcds are taken.
bool fractions_sum_to_zero(const std::vector<Fraction>& terms);

}  // namespace hyperct
