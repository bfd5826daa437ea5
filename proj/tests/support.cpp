#include "support.hpp"

#include "hyperct/errors.hpp"

namespace testsupport {

PolyY poly(std::initializer_list<Mono> terms) {
  PolyY r;
  for (const auto& t : terms) {
    Rat c(t.num, t.den);
    c.canonicalize();
    r += PolyY::monomial(RatX(PolyX::monomial(c, t.i)), t.j);
  }
  return r;
}

PolyY lin(long lambda, long mu, long c) { return PolyY::linear(Rat(lambda), Rat(mu), Rat(c)); }

PolyY random_poly(std::mt19937& rng, int max_dx, int max_dy, int coeff) {
  std::uniform_int_distribution<int> cd(-coeff, coeff);
  PolyY r;
  for (int j = 0; j <= max_dy; ++j)
    for (int i = 0; i <= max_dx; ++i) {
      int c = cd(rng);
      if (c != 0) r += PolyY::monomial(RatX(PolyX::monomial(Rat(c), i)), j);
    }
  return r;
}

RatXY random_rat(std::mt19937& rng, int max_dx, int max_dy) {
  PolyY d;
  while (d.is_zero()) d = random_poly(rng, max_dx, max_dy, 3);
  return RatXY(random_poly(rng, max_dx, max_dy), d);
}

}  // namespace testsupport

namespace testsupport {

namespace {

std::optional<Int> factorial(const Rat& n) {
  if (n.get_den() != 1 || n < 0) return std::nullopt;
  Int r;
  mpz_fac_ui(r.get_mpz_t(), n.get_num().get_ui());
  return r;
}

Rat lin_value(const LinArg& l, long x, long y) { return Rat(l.lambda * x) + Rat(l.mu * y) + l.c; }

Rat power(Rat b, long e) {
  if (e < 0) {
    b = 1 / b;
    e = -e;
  }
  Rat r(1);
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

std::optional<Rat> eval_term(const TermAST& ast, long x, long y) {
  Rat value(1);
  for (const auto& a : ast.atoms) {
    Rat v;
    switch (a.kind) {
      case Atom::Kind::Rational: {
        try {
          v = a.rational.eval(Rat(x), Rat(y));
        } catch (const Error&) {
          return std::nullopt;
        }
        break;
      }
      case Atom::Kind::Power: {
        Rat e = lin_value(a.a, x, y);
        if (e.get_den() != 1) return std::nullopt;
        v = power(a.base, e.get_num().get_si());
        break;
      }
      case Atom::Kind::Factorial: {
        auto f = factorial(lin_value(a.a, x, y));
        if (!f) return std::nullopt;
        v = Rat(*f);
        break;
      }
      case Atom::Kind::Binomial: {
        Rat n = lin_value(a.a, x, y), k = lin_value(a.b, x, y);
        auto fn = factorial(n), fk = factorial(k), fnk = factorial(n - k);
        if (!fn || !fk || !fnk) return std::nullopt;
        v = Rat(*fn) / Rat(*fk * *fnk);
        break;
      }
      case Atom::Kind::Pochhammer: {
        Rat s = lin_value(a.a, x, y), n = lin_value(a.b, x, y);
        if (n.get_den() != 1 || n < 0) return std::nullopt;
        v = 1;
        for (long k = 0; k < n.get_num().get_si(); ++k) v *= s + k;
        break;
      }
    }
    if (v == 0 && a.exponent < 0) return std::nullopt;
    value *= power(v, a.exponent);
  }
  return value;
}

std::string sharper_upper_term(int a, int b, bool proper) {
  const std::string A = std::to_string(a), B = std::to_string(b);
  std::string num = "(" + std::to_string(a * a) + "*y^2 + " + std::to_string(a * a) + "*y - " +
                    std::to_string(a * b) + "*y + " + std::to_string(2 * a) + "*x*y + x^2)";
  if (!proper) return num + "/((x + " + A + "*y + " + A + ")*(x + " + A + "*y)*(x + " + B + "*y))";
  std::string t = num;
  for (int j = 1; j < a; ++j) t += "*(x + " + A + "*y + " + std::to_string(j) + ")";
  return t + "*Factorial(x + " + A + "*y - 1)/Factorial(x + " + A + "*y + " + A + ")*Factorial(x + " + B +
         "*y - 1)/Factorial(x + " + B + "*y)";
}

std::string sharper_lower_term(int a) {
  const std::string A = std::to_string(a);
  return "1/((x - " + A + "*y - " + A + ")*Factorial(x - " + A + "*y - 2))";
}

std::vector<std::string> proper_corpus(unsigned seed, int n) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> lam(0, 2), mu(-2, 2), c(-1, 2), coin(0, 1), kinds(1, 2), pw(2, 3), lam1(1, 2);
  std::vector<std::string> out;
  auto lin_text = [&](int l, int m, int k) {
    std::string s = std::to_string(l) + "*x + " + std::to_string(m) + "*y + " + std::to_string(k);
    return s;
  };
  while (static_cast<int>(out.size()) < n) {
    std::string t;
    const int p = c(rng);
    t += "(x + " + std::to_string(p == 0 ? 1 : p) + "*y + " + std::to_string(c(rng) + 3) + ")";
    const int nf = kinds(rng);
    bool has_y = false;
    for (int i = 0; i < nf; ++i) {
      int l = lam(rng), m = mu(rng);
      if (m != 0) has_y = true;
      t += coin(rng) ? " * " : " / ";
      t += "Factorial(" + lin_text(l == 0 && m == 0 ? 1 : l, m, c(rng) + 2) + ")";
    }
    if (coin(rng)) t += " * " + std::to_string(pw(rng)) + "^(x + y)";
    // rational factors 1/L written as (L-1)!/L!, giving nontrivial significant denominators
    if (coin(rng)) {
      int l = lam1(rng), m = mu(rng), k = c(rng) + 3;
      if (m == 0) m = 1;
      t += " * Factorial(" + lin_text(l, m, k - 1) + ") / Factorial(" + lin_text(l, m, k) + ")";
      if (coin(rng)) t += " / Factorial(" + lin_text(l, m, k + 2) + ") * Factorial(" + lin_text(l, m, k + 1) + ")";
    }
    if (!has_y) t += " / Factorial(x + y + 1)";
    out.push_back(t);
  }
  return out;
}

}  // namespace testsupport
