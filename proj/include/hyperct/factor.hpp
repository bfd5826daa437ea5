#pragma once

#include <utility>
#include <vector>

#include "hyperct/polyy.hpp"

namespace hyperct {

struct Factorization {
  RatX unit;
  /// irreducible factors, monic in y, pairwise distinct
  std::vector<std::pair<PolyY, int>> factors;

  PolyY expand() const;
};

/// Factorization over C(x) = Q(x). Throws ZeroInput on zero.
Factorization factor_y(const PolyY& p);

/// Square-free decomposition over C(x): p = lc * prod q_i^i with q_i monic,
/// only nonconstant parts reported.
std::vector<std::pair<PolyY, int>> squarefree_y(const PolyY& p);

/// Irreducible monic factors over Q with multiplicities.
std::vector<std::pair<UPoly, int>> factor_q(const UPoly& p);

/// Irreducible factors of a square-free primitive integer polynomial.
std::vector<UPoly> factor_squarefree_z(const UPoly& f);

/// Irreducible factors (primitive, positive-degree in y) of a square-free
/// primitive element of Q[x][y] of positive y-degree.
std::vector<PolyXY> factor_squarefree_xy(const PolyXY& f);

bool is_irreducible_y(const PolyY& p);

}  // namespace hyperct
