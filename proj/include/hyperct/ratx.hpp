#pragma once

#include <optional>
#include <string>

#include "hyperct/upoly.hpp"

namespace hyperct {

using PolyX = UPoly;

/// Element of C(x) = Q(x) as a reduced fraction with monic denominator.
class RatX {
 public:
  RatX() : den_(Rat(1)) {}
  RatX(const Rat& c) : num_(c), den_(Rat(1)) {}  // NOLINT
  RatX(long c) : RatX(Rat(c)) {}                 // NOLINT
  RatX(PolyX n) : num_(std::move(n)), den_(Rat(1)) {}  // NOLINT
  RatX(const PolyX& n, const PolyX& d);

  static RatX x() { return RatX(PolyX::var()); }

  const PolyX& num() const { return num_; }
  const PolyX& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.is_one() && num_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }
  /// Value as a rational constant, if the element does not depend on x.
  std::optional<Rat> as_constant() const;

  RatX operator-() const;
  RatX& operator+=(const RatX& o) { return *this = *this + o; }
  RatX& operator-=(const RatX& o) { return *this = *this - o; }
  RatX& operator*=(const RatX& o) { return *this = *this * o; }
  RatX& operator/=(const RatX& o) { return *this = *this / o; }
  friend RatX operator+(const RatX& a, const RatX& b);
  friend RatX operator-(const RatX& a, const RatX& b) { return a + (-b); }
  friend RatX operator*(const RatX& a, const RatX& b);
  friend RatX operator/(const RatX& a, const RatX& b) { return a * b.inverse(); }
  friend bool operator==(const RatX& a, const RatX& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatX& a, const RatX& b) { return !(a == b); }

  RatX inverse() const;
  /// x -> x + k
  RatX shift(const Rat& k) const;
  RatX pow(int e) const;
  /// Value at x = t; the denominator must not vanish there.
  Rat eval(const Rat& t) const;

  std::string to_string() const;

 private:
  PolyX num_, den_;
};

}  // namespace hyperct
