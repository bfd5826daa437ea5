#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hyperct/hyperterm.hpp"
#include "hyperct/kernel.hpp"

namespace hyperct {

/// u*sigma_y(p) - v*p
PolyY phi_K(const PolyY& p, const KernelShell& ks);

/// Echelon data for im(phi_K); the complement W_K is spanned by the
/// monomials y^l, l <= cap, whose degree is not attainable.
class ComplementBasis {
 public:
  ComplementBasis() = default;
  ComplementBasis(const PolyY& u, const PolyY& v, int cap);

  void extend(int cap);
  int cap() const { return cap_; }
  bool attainable(int degree) const { return reducers_.count(degree) != 0; }
  /// Unattainable degrees up to cap.
  std::vector<int> basis() const;
  /// Exact dim W_K (independent of cap).
  int dimension();
  /// p = phi_K(w) + q with q in W_K; returns (w, q).
  std::pair<PolyY, PolyY> reduce(const PolyY& p);

 private:
  PolyY u_, v_;
  int cap_ = -1;
  int next_d_ = 0;
  int d0_ = -1;
  std::map<int, std::pair<PolyY, PolyY>> reducers_;  // leading degree -> (w, phi(w))
};

ComplementBasis complement_basis(const KernelShell& ks, int cap);
std::pair<PolyY, PolyY> polynomial_reduce(const PolyY& p, const KernelShell& ks);

/// r = a/b + q/v
struct ResidualForm {
  PolyY a;
  PolyY b = PolyY(RatX(1));
  PolyY q;
  PolyY v = PolyY(RatX(1));

  RatXY value() const;
  bool is_zero() const { return a.is_zero() && q.is_zero(); }
};

struct ReductionResult {
  RatXY g;  // S = K*sigma_y(g) - g + r
  ResidualForm r;
};

/// Reduction engine bound to one kernel; caches the factorizations of u and
/// v and the complement basis.
class ShellReducer {
 public:
  explicit ShellReducer(KernelShell ks);

  /// Significant-denominator classes are placed at a factor of `preferred`
  /// when that factor is strongly prime with K.
  ReductionResult reduce(const RatXY& S, const std::vector<PolyY>& preferred = {});
  const KernelShell& kernel() const { return ks_; }
  ComplementBasis& basis() { return basis_; }

 private:
  KernelShell ks_;
  std::vector<std::pair<PolyY, int>> fu_, fv_;
  ComplementBasis basis_;
};

ReductionResult shell_reduce(const RatXY& S, const KernelShell& ks);

/// Checks deg a < deg b, gcd(a, b) = 1, b monic, shift-free, strongly prime
/// with K, and q in W_K.
bool residual_invariants_hold(const ResidualForm& r, const KernelShell& ks, std::string* why = nullptr);

struct SummabilityResult {
  bool summable;
  KernelShell ks;
  ReductionResult reduction;  // T = Delta_y(g*H) + r*H
};
SummabilityResult is_summable(const HyperTerm& T);

/// Re-reduces r so that its significant denominator divides target.
/// Throws NotAlignable.
ReductionResult align_residual(const ResidualForm& r, const KernelShell& ks, const PolyY& target);

/// Number of exact identity checks performed by shell reductions so far, and
/// how many of them failed (a failure also throws).
long reduction_identity_checks();
long reduction_identity_failures();

}  // namespace hyperct
