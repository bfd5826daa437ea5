#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "hyperct/factor.hpp"
#include "hyperct/kernel.hpp"

namespace hyperct {

/// { h : deg gcd(sigma_y^h(p), q) > 0 }. Throws ZeroInput.
std::set<long> dispersion_set(const PolyY& p, const PolyY& q);
bool is_shift_free_y(const PolyY& p);
bool is_shift_reduced(const RatXY& K);
/// gcd(p, sigma_y^{-i}(u)) = gcd(p, sigma_y^i(v)) = 1 for all i >= 0.
bool is_strongly_prime(const PolyY& p, const KernelShell& ks);
bool is_strongly_prime(const PolyY& p, const PolyY& u, const PolyY& v);

/// l with q = sigma_y^l(p), for irreducible monic p, q. Throws NotIrreducible.
std::optional<long> shift_equivalent_y(const PolyY& p, const PolyY& q);
/// Same without the irreducibility check; p, q monic.
std::optional<long> shift_offset(const PolyY& p, const PolyY& q);
/// Multiplicity-preserving bijection of factors up to y-shifts. Throws NotShiftFree.
bool shift_related_y(const PolyY& b1, const PolyY& b2);

struct ShiftClassY {
  PolyY representative;  // lowest-offset member
  std::vector<std::pair<long, int>> members;  // (offset, multiplicity), sorted by offset
};
/// Groups monic irreducible factors into ~_y classes.
std::vector<ShiftClassY> shift_classes_y(const std::vector<std::pair<PolyY, int>>& factors);

struct IntegerLinearForm {
  Int lambda, mu;
  UPoly P;  // p = P(lambda*x + mu*y)
};
std::optional<IntegerLinearForm> detect_integer_linear(const PolyXY& p);
std::optional<IntegerLinearForm> detect_integer_linear(const PolyY& p);

/// (alpha, beta) with alpha*lambda + beta*mu = 1, so that
/// sigma_x^alpha sigma_y^beta maps P(lambda x + mu y) to P(lambda x + mu y + 1).
/// Throws BadDirection.
std::pair<Int, Int> delta_op(const Int& lambda, const Int& mu);
/// P(lambda*x + mu*y + c) as a bivariate polynomial.
PolyY integer_linear_poly(const UPoly& P, const Int& lambda, const Int& mu, const Rat& c = Rat(0));

struct IntegerLinearFactor {
  UPoly P;  // monic, irreducible
  Int lambda, mu;
  /// (k, m): factor delta^k(P(lambda x + mu y))^m; m < 0 for denominator factors
  std::vector<std::pair<long, int>> xi;
};

struct ShiftHomDecomposition {
  RatX constant;
  std::vector<IntegerLinearFactor> classes;

  RatXY reconstruct() const;
};
/// Throws NotIntegerLinear naming the offending factor.
ShiftHomDecomposition integer_linear_decomposition(const RatXY& r);

}  // namespace hyperct
