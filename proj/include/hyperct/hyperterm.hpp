#pragma once

#include <memory>

#include "hyperct/ratxy.hpp"

namespace hyperct {

struct TermAST;

/// Hypergeometric term given by its shift quotients:
/// sigma_x(T) = f*T, sigma_y(T) = g*T.
struct HyperTerm {
  RatXY f;
  RatXY g;
  std::shared_ptr<const TermAST> provenance;

  /// sigma_x(g)*f == sigma_y(f)*g
  bool compatible() const;
  /// Throws CompatibilityViolation unless compatible().
  static HyperTerm make(const RatXY& f, const RatXY& g);
};

}  // namespace hyperct
