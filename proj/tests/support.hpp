#pragma once

#include <random>
#include <string>

#include "hyperct/ratxy.hpp"

namespace testsupport {

using namespace hyperct;

/// Small polynomial builder: coefficient list {{i, j, c}, ...} for c*x^i*y^j.
struct Mono {
  int i, j;
  long num, den = 1;
};
PolyY poly(std::initializer_list<Mono> terms);
PolyY lin(long lambda, long mu, long c);  // lambda*x + mu*y + c

PolyY random_poly(std::mt19937& rng, int max_dx, int max_dy, int coeff = 5);
RatXY random_rat(std::mt19937& rng, int max_dx, int max_dy);

}  // namespace testsupport

#include <optional>
#include <vector>

#include "hyperct/frontend.hpp"

namespace testsupport {

/// Numeric value of a term at integer (x, y) straight from its factorials;
/// nullopt at poles and at negative factorial arguments.
std::optional<Rat> eval_term(const TermAST& ast, long x, long y);

/// Rational term of the order-bound comparison with parameters (a, b);
/// `proper` writes it with factorials so that a proper form is available.
std::string sharper_upper_term(int a, int b, bool proper);
/// 1/((x - a y - a)(x - a y - 2)!)
std::string sharper_lower_term(int a);

/// Random proper terms written with factorials, small coefficients.
std::vector<std::string> proper_corpus(unsigned seed, int n);

}  // namespace testsupport
