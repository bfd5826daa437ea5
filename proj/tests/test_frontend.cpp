#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperct/errors.hpp"
#include "hyperct/frontend.hpp"
#include "support.hpp"

using namespace hyperct;
using namespace testsupport;

namespace {
ErrorCode code_of(const std::string& text) {
  try {
    term_from_string(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

// f and g against direct evaluation of the term on a small grid
void check_quotients(const std::string& text) {
  TermAST ast = parse_term(text);
  HyperTerm T = shift_quotients(ast);
  int checked = 0;
  for (long x = 0; x <= 6; ++x)
    for (long y = 0; y <= 6; ++y) {
      auto t = eval_term(ast, x, y), tx = eval_term(ast, x + 1, y), ty = eval_term(ast, x, y + 1);
      if (!t || *t == 0) continue;
      try {
        if (tx) CHECK(T.f.eval(Rat(x), Rat(y)) * *t == *tx);
        if (ty) CHECK(T.g.eval(Rat(x), Rat(y)) * *t == *ty);
        ++checked;
      } catch (const Error&) {
      }
    }
  CHECK(checked > 0);
}
}  // namespace

TEST_CASE("parse examples") {
  TermAST b = parse_term("Binomial(x,y)");
  REQUIRE(b.atoms.size() == 1);
  CHECK(b.atoms[0].kind == Atom::Kind::Binomial);
  TermAST t = parse_term("(x+1)/(y+2) * 3^y * Factorial(2*x - y)");
  CHECK(t.atoms.size() == 3);
  CHECK(code_of("Factorial(x*y)") == ErrorCode::NonIntegerLinearArgument);
}

TEST_CASE("syntax errors carry a position") {
  try {
    parse_term("Factorial(x");
    FAIL("no error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() == 11);
  }
  CHECK(code_of("x +") == ErrorCode::SyntaxError);
  CHECK(code_of("a*x") == ErrorCode::SyntaxError);
  CHECK(code_of("Gamma(x)") == ErrorCode::SyntaxError);
  CHECK(code_of("x^(1/2)") == ErrorCode::SyntaxError);
  CHECK(code_of("Factorial(x/2)") == ErrorCode::NonIntegerLinearArgument);
}

TEST_CASE("round trip") {
  for (const std::string& s : std::vector<std::string>{"Binomial(x,y)", "(x+1)/(y+2) * 3^y * Factorial(2*x - y)",
                        "Pochhammer(x, y)^2 / Factorial(x + 2*y + 1/2)", "(1/2)^(x - y) * (x^2 + y)",
                        sharper_upper_term(2, 3, true), sharper_lower_term(4)}) {
    INFO(s);
    TermAST a = parse_term(s);
    TermAST b = parse_term(a.to_string());
    CHECK(a == b);
    CHECK(b.to_string() == a.to_string());
  }
}

TEST_CASE("shift quotients") {
  HyperTerm b = term_from_string("Binomial(x,y)");
  CHECK(b.f == RatXY(lin(1, 0, 1), lin(1, -1, 1)));
  CHECK(b.g == RatXY(lin(1, -1, 0), lin(0, 1, 1)));
  HyperTerm f = term_from_string("Factorial(y)");
  CHECK(f.f == RatXY(1));
  CHECK(f.g == RatXY(lin(0, 1, 1)));
  HyperTerm p = term_from_string("2^x*3^y");
  CHECK(p.f == RatXY(2));
  CHECK(p.g == RatXY(3));
  CHECK(b.provenance);
}

TEST_CASE("quotients from text") {
  HyperTerm t = term_from_quotients("(x+1)/(x+1-y)", "(x-y)/(y+1)");
  CHECK(t.f == term_from_string("Binomial(x,y)").f);
  CHECK_THROWS_AS(term_from_quotients("y", "x"), Error);
  CHECK(parse_rational("(x+y)/(x+y)") == RatXY(1));
}

TEST_CASE("quotients agree with direct evaluation") {
  for (const std::string& s : std::vector<std::string>{"Binomial(x,y)", "Pochhammer(x+1, y)", "Factorial(2*x - y + 6) * 3^y",
                              "(2/3)^(x + 2*y) / Factorial(x + y)", "(x + 2*y + 1)^2 * Binomial(2*x, y)",
                              sharper_upper_term(2, 3, true), sharper_lower_term(3)}) {
    INFO(s);
    check_quotients(s);
  }
}

TEST_CASE("randomized terms are compatible") {
  for (const auto& s : proper_corpus(19, 25)) {
    INFO(s);
    HyperTerm T = term_from_string(s);
    CHECK(T.compatible());
    check_quotients(s);
  }
}

TEST_CASE("proper form extraction") {
  auto spec = proper_form(parse_term("Binomial(x,y)"));
  REQUIRE(spec);
  CHECK(spec->factors.size() == 3);
  CHECK(apagodu_zeilberger_bound(*spec) == 1);
  auto sq = proper_form(parse_term("Binomial(x,y)^2"));
  REQUIRE(sq);
  CHECK(apagodu_zeilberger_bound(*sq) == 2);
  CHECK(!proper_form(parse_term("1/(x+y)")));
  CHECK(!proper_form(parse_term("Factorial(y - x)")));
}
