#pragma once

#include "hyperct/hyperterm.hpp"
#include "hyperct/kernel.hpp"

namespace hyperct {

/// Shift-reduced K and shell S with f = K*sigma_y(S)/S. Throws ZeroInput.
KernelShell rnf(const RatXY& f);
KernelShell kernel_shell_of_term(const HyperTerm& T);

/// v = v'*p^alpha  ->  K' = u/(v'*sigma_y(p)^alpha), S' = p^alpha*S. Throws NotAFactor.
KernelShell move_denominator_factor(const KernelShell& ks, const PolyY& p, int alpha);
/// u = u'*p^alpha  ->  K' = u'*sigma_y^{-1}(p)^alpha/v, S' = sigma_y^{-1}(p)^alpha*S.
KernelShell move_numerator_factor(const KernelShell& ks, const PolyY& p, int alpha);
/// Coalesces each ~_y class of v at its highest offset and of u at its lowest.
KernelShell normalize_kernel_shift_free(const KernelShell& ks);

}  // namespace hyperct
