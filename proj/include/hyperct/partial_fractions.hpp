#pragma once

#include <vector>

#include "hyperct/factor.hpp"
#include "hyperct/ratxy.hpp"

namespace hyperct {

struct PartialFraction {
  PolyY num;   // deg num < deg base
  PolyY base;  // irreducible, monic
  int power = 1;
};

struct PartialFractions {
  PolyY polypart;
  std::vector<PartialFraction> terms;

  RatXY reassemble() const;
};

/// Complete decomposition of f in y over C(x).
PartialFractions partial_fractions_y(const RatXY& f);
/// Same, with the factorization of den(f) supplied by the caller.
PartialFractions partial_fractions_y(const RatXY& f, const Factorization& den_factors);

}  // namespace hyperct
