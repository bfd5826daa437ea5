#pragma once

#include <optional>
#include <vector>

#include "hyperct/hyperterm.hpp"
#include "hyperct/kernel.hpp"
#include "hyperct/reduction.hpp"

namespace hyperct {

/// Residuals of sigma_x^i(T), i = 0..rho, all relative to one fixed H.
struct TelescoperSystem {
  KernelShell ks;
  std::vector<RatXY> shells;                // S_i = sigma_x^i(T)/H
  std::vector<ReductionResult> reductions;  // S_i = K*sigma_y(g_i) - g_i + r_i
  PolyY B = PolyY(RatX(1));                 // lcm of the b_i

  int order() const { return static_cast<int>(shells.size()) - 1; }
  /// Rows: y-coefficients of a_i*B/b_i, then y-coefficients of q_i.
  std::vector<std::vector<RatX>> matrix() const;
};

/// Builds the system incrementally. Each new residual is reduced with the
/// factors of B (or of an optional target) as preferred class representatives.
class ResidualSequence {
 public:
  ResidualSequence(const HyperTerm& T, const KernelShell& ks, const PolyY& target = PolyY(RatX(1)));

  /// Appends residuals until the system has order rho.
  void extend_to(int rho);
  const TelescoperSystem& system() const { return sys_; }

 private:
  void push(const RatXY& S);

  RatXY N_;  // sigma_x(H)/H
  ShellReducer reducer_;
  std::vector<PolyY> preferred_;
  TelescoperSystem sys_;
};

TelescoperSystem residual_sequence(const HyperTerm& T, const KernelShell& ks, int rho);

/// True iff every irreducible factor of b passes the integer-linear test.
/// On failure the offending factor is stored in *evidence.
bool existence_check(const ResidualForm& r0, PolyY* evidence = nullptr);

/// Nonzero nullspace vector over C(x), scaled to content-free polynomials
/// with lc(e_rho) > 0 (highest nonzero entry if e_rho = 0).
std::optional<std::vector<PolyX>> solve_telescoper_system(const TelescoperSystem& sys);

/// Nullspace basis of a matrix over C(x).
std::vector<std::vector<RatX>> nullspace(std::vector<std::vector<RatX>> rows, int ncols);

struct Telescoper {
  std::vector<PolyX> e;  // L = sum e_i S_x^i
  int order = 0;
  KernelShell ks;
  RatXY certificate;    // G with L(T) = Delta_y(G*H)
  RatXY certificate_t;  // c with L(T) = Delta_y(c*T), c = G/S
};

struct TelescopeOutcome {
  enum class Status { Found, NoTelescoper, OrderCapExceeded };
  Status status = Status::Found;
  std::optional<Telescoper> telescoper;
  PolyY evidence;  // non-integer-linear factor when no telescoper exists
  ResidualForm initial;
  int upper = 0;
};

TelescopeOutcome reduction_ct(const HyperTerm& T, std::optional<int> max_order = std::nullopt);

/// sum_i e_i prod_{j<i} sigma_x^j(f) == g*sigma_y(c) - c with c = certificate_t.
bool verify_telescoper(const HyperTerm& T, const Telescoper& L);
bool verify_telescoper(const HyperTerm& T, const std::vector<PolyX>& e, const RatXY& certificate_t);

/// Normalization of a nullspace vector to content-free polynomials.
std::vector<PolyX> normalize_operator(const std::vector<RatX>& v);

}  // namespace hyperct
