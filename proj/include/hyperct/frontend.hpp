#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hyperct/bounds.hpp"
#include "hyperct/hyperterm.hpp"

namespace hyperct {

/// lambda*x + mu*y + c with integer lambda, mu
struct LinArg {
  Int lambda = 0, mu = 0;
  Rat c = 0;

  PolyY poly() const { return PolyY::linear(Rat(lambda), Rat(mu), c); }
  std::string to_string() const;
  friend bool operator==(const LinArg& a, const LinArg& b) {
    return a.lambda == b.lambda && a.mu == b.mu && a.c == b.c;
  }
};

struct Atom {
  enum class Kind { Rational, Factorial, Binomial, Pochhammer, Power };
  Kind kind = Kind::Rational;
  RatXY rational;  // Rational
  LinArg a, b;     // Factorial(a), Binomial(a, b), Pochhammer(a, b), base^a
  Rat base = 1;    // Power
  int exponent = 1;

  std::string to_string() const;  // without the exponent
  friend bool operator==(const Atom& p, const Atom& q) {
    return p.kind == q.kind && p.rational == q.rational && p.a == q.a && p.b == q.b &&
           p.base == q.base && p.exponent == q.exponent;
  }
};

/// Product of atoms with integer exponents.
struct TermAST {
  std::vector<Atom> atoms;

  std::string to_string() const;
  friend bool operator==(const TermAST& a, const TermAST& b) { return a.atoms == b.atoms; }
};

/// Throws SyntaxError(position, expected) or NonIntegerLinearArgument.
TermAST parse_term(const std::string& input);
/// Polynomial or rational function in x and y.
RatXY parse_rational(const std::string& input);
/// Shift quotients assembled atom by atom; provenance is set.
HyperTerm shift_quotients(const TermAST& ast);
HyperTerm term_from_string(const std::string& input);
/// Term given by its quotients; throws CompatibilityViolation.
HyperTerm term_from_quotients(const std::string& fx, const std::string& gy);

/// Proper form read off the factorial atoms, if every atom fits it.
std::optional<ProperTermSpec> proper_form(const TermAST& ast);

}  // namespace hyperct
