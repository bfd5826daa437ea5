#pragma once

#include <optional>
#include <vector>

#include "hyperct/hyperterm.hpp"
#include "hyperct/kernel.hpp"
#include "hyperct/reduction.hpp"

namespace hyperct {

/// Common denominator B for all significant denominators of sigma_x^i(T):
/// per integer-linear class, prod_{j<mu} sigma_y^{l_j}(P(lambda x + mu y + j))^m
/// with each factor strongly prime with K and b | B. Throws NotIntegerLinear.
PolyY build_common_denominator(const PolyY& b, const KernelShell& ks);

/// sum_j mu_j m_j deg P_j over the integer-linear decomposition of b.
int integer_linear_degree(const PolyY& b);

struct UpperBound {
  int upper;        // deg_y B + dim W_K
  int closed_form;  // max{deg u, deg v} - [deg(v-u) <= deg u - 1] + sum mu_j m_j deg P_j
  PolyY B;
  int dim_wk;
};

/// Upper bound for the order of a minimal telescoper, from the initial
/// significant denominator b. Throws NoTelescoperExists.
UpperBound upper_bound(const PolyY& b, const KernelShell& ks);
UpperBound upper_bound(const HyperTerm& T);

/// Lower bound from b; throws NotApplicable when b is empty and the residual
/// is zero (summable input).
int lower_bound(const ResidualForm& r);
std::optional<int> lower_bound(const HyperTerm& T);

/// Abramov-Le lower bound. The reduction data (ks, r) must come from T.
int abramov_le_bound(const HyperTerm& T, const KernelShell& ks, const ResidualForm& r);
std::optional<int> abramov_le_bound(const HyperTerm& T);

enum class FactorKind { NumPlus, NumMinus, DenPlus, DenMinus };

struct ProperFactor {
  FactorKind kind;
  Int coeff_x;  // nonnegative
  Int coeff_y;  // nonnegative
  Rat constant;
};

/// p * w^x * z^y * prod of factorials (argument - 1)! in the four sign
/// patterns of a proper term.
struct ProperTermSpec {
  PolyXY p;
  Rat w = 1, z = 1;
  std::vector<ProperFactor> factors;
};

/// max{sum(alpha'_i + nu'_i), sum(beta'_i + mu'_i)}
int apagodu_zeilberger_bound(const ProperTermSpec& spec);

struct BoundReport {
  std::optional<int> lower;  // absent for summable input
  int upper = 0;
  int upper_closed_form = 0;
  PolyY b;
  PolyY B;
  int dim_wk = 0;
  std::optional<int> b_az;
  std::optional<int> b_al;
};

/// B_AZ is filled in only when the provenance admits a proper form.
BoundReport bounds_report(const HyperTerm& T);

}  // namespace hyperct
