#include "hyperct/frontend.hpp"

#include <cctype>
#include <memory>
#include <sstream>

#include "hyperct/errors.hpp"

namespace hyperct {

namespace {

std::string lin_text(const Int& lambda, const Int& mu, const Rat& c) {
  PolyXY p = PolyXY::from_y(PolyY::linear(Rat(lambda), Rat(mu), c));
  return p.to_string();
}

// rat * product of atoms
struct Value {
  RatXY rat = RatXY(1);
  std::vector<Atom> atoms;
  bool pure() const { return atoms.empty(); }
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Value parse_all() {
    Value v = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError(pos_, "end of input");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw SyntaxError(pos_, std::string("'") + c + "'");
  }

  Value expr() {
    skip();
    Value acc;
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    acc = term();
    if (neg) acc.rat = -acc.rat;
    while (true) {
      skip();
      const std::size_t at = pos_;
      int sign = 0;
      if (accept('+')) sign = 1;
      else if (accept('-')) sign = -1;
      if (sign == 0) return acc;
      Value rhs = term();
      if (!acc.pure() || !rhs.pure()) throw SyntaxError(at, "'*' or '/' between hypergeometric factors");
      acc.rat = sign > 0 ? acc.rat + rhs.rat : acc.rat - rhs.rat;
    }
  }

  Value term() {
    Value acc = factor();
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        Value rhs = factor();
        acc.rat *= rhs.rat;
        acc.atoms.insert(acc.atoms.end(), rhs.atoms.begin(), rhs.atoms.end());
      } else if (accept('/')) {
        Value rhs = factor();
        if (rhs.rat.is_zero()) throw SyntaxError(at, "nonzero divisor");
        acc.rat /= rhs.rat;
        for (auto a : rhs.atoms) {
          a.exponent = -a.exponent;
          acc.atoms.push_back(a);
        }
      } else {
        return acc;
      }
    }
  }

  Value factor() {
    skip();
    if (accept('-')) {
      Value v = factor();
      v.rat = -v.rat;
      return v;
    }
    const std::size_t base_at = pos_;
    Value base = primary();
    skip();
    if (!accept('^')) return base;
    skip();
    const std::size_t exp_at = pos_;
    bool neg = accept('-');
    Value e = primary();
    if (!e.pure()) throw SyntaxError(exp_at, "integer or integer-linear exponent");
    if (neg) e.rat = -e.rat;
    if (e.rat.num().degree() <= 0 && e.rat.den().degree() <= 0 && e.rat.num().coeff(0).is_constant()) {
      Rat k = e.rat.num().coeff(0).as_constant().value_or(Rat(0));
      if (k.get_den() != 1) throw SyntaxError(exp_at, "integer exponent");
      const long n = k.get_num().get_si();
      if (n < 0 && base.rat.is_zero()) throw SyntaxError(base_at, "nonzero base");
      base.rat = base.rat.pow(static_cast<int>(n));
      for (auto& a : base.atoms) {
        if (a.kind == Atom::Kind::Power) {
          a.a.lambda *= n;
          a.a.mu *= n;
          a.a.c *= n;
        } else {
          a.exponent *= static_cast<int>(n);
        }
      }
      return base;
    }
    // c^(lambda x + mu y + c0)
    if (!base.pure() || !base.rat.is_polynomial_y() || base.rat.num().degree() > 0 ||
        !base.rat.num().coeff(0).is_constant() || base.rat.is_zero())
      throw SyntaxError(base_at, "nonzero rational constant base");
    Atom a;
    a.kind = Atom::Kind::Power;
    a.base = *base.rat.num().coeff(0).as_constant();
    a.a = to_lin(e.rat, exp_at);
    Value v;
    v.atoms.push_back(a);
    return v;
  }

  Value primary() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError(pos_, "operand");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      Value v;
      v.rat = RatXY(Rat(Int(s_.substr(start, pos_ - start))));
      return v;
    }
    if (c == '(') {
      ++pos_;
      Value v = expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      Value v;
      if (name == "x") {
        v.rat = RatXY::x();
        return v;
      }
      if (name == "y") {
        v.rat = RatXY::y();
        return v;
      }
      Atom a;
      if (name == "Factorial") {
        a.kind = Atom::Kind::Factorial;
      } else if (name == "Binomial") {
        a.kind = Atom::Kind::Binomial;
      } else if (name == "Pochhammer") {
        a.kind = Atom::Kind::Pochhammer;
      } else {
        throw SyntaxError(start, "x, y, Factorial, Binomial or Pochhammer (symbolic parameters are not supported)");
      }
      expect('(');
      a.a = lin_arg();
      if (a.kind != Atom::Kind::Factorial) {
        expect(',');
        a.b = lin_arg();
      }
      expect(')');
      v.atoms.push_back(a);
      return v;
    }
    throw SyntaxError(pos_, "number, variable, function or '('");
  }

  LinArg lin_arg() {
    skip();
    const std::size_t at = pos_;
    Value v = expr();
    if (!v.pure()) throw Error(ErrorCode::NonIntegerLinearArgument, "at position " + std::to_string(at));
    return to_lin(v.rat, at);
  }

  static LinArg to_lin(const RatXY& r, std::size_t at) {
    auto fail = [&] {
      return Error(ErrorCode::NonIntegerLinearArgument,
                   "at position " + std::to_string(at) + ": " + r.to_string());
    };
    if (!r.is_polynomial_y() || r.num().degree() > 1) throw fail();
    const RatX& c0 = r.num().coeff(0);
    const RatX& c1 = r.num().coeff(1);
    if (!c0.is_polynomial() || c0.num().degree() > 1 || !c1.is_constant()) throw fail();
    LinArg l;
    Rat lam = c0.num().coeff(1), mu = c1.num().coeff(0);
    if (lam.get_den() != 1 || mu.get_den() != 1) throw fail();
    l.lambda = lam.get_num();
    l.mu = mu.get_num();
    l.c = c0.num().coeff(0);
    return l;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

// (L + s)!/L!
RatXY factorial_ratio(const LinArg& L, long s) {
  PolyY p = L.poly();
  RatXY r(1);
  if (s >= 0) {
    for (long k = 1; k <= s; ++k) r *= RatXY(p + PolyY(RatX(Rat(k))));
  } else {
    for (long k = 0; k < -s; ++k) r /= RatXY(p - PolyY(RatX(Rat(k))));
  }
  return r;
}

LinArg operator-(const LinArg& a, const LinArg& b) { return {a.lambda - b.lambda, a.mu - b.mu, a.c - b.c}; }
LinArg operator+(const LinArg& a, const LinArg& b) { return {a.lambda + b.lambda, a.mu + b.mu, a.c + b.c}; }
LinArg shifted(const LinArg& a, const Rat& k) { return {a.lambda, a.mu, a.c + k}; }

// Factorial atoms with exponent +-1 equivalent to a
std::vector<std::pair<LinArg, int>> factorials(const Atom& a) {
  switch (a.kind) {
    case Atom::Kind::Factorial: return {{a.a, 1}};
    case Atom::Kind::Binomial: return {{a.a, 1}, {a.b, -1}, {a.a - a.b, -1}};
    case Atom::Kind::Pochhammer: return {{shifted(a.a + a.b, Rat(-1)), 1}, {shifted(a.a, Rat(-1)), -1}};
    default: return {};
  }
}

}  // namespace

std::string LinArg::to_string() const { return lin_text(lambda, mu, c); }

std::string Atom::to_string() const {
  switch (kind) {
    case Kind::Rational: {
      auto [n, d] = rational.integral_parts();
      if (d.degree_y() == 0 && d.coeff(0).is_one()) return "(" + n.to_string() + ")";
      return "(" + n.to_string() + ")/(" + d.to_string() + ")";
    }
    case Kind::Factorial: return "Factorial(" + a.to_string() + ")";
    case Kind::Binomial: return "Binomial(" + a.to_string() + ", " + b.to_string() + ")";
    case Kind::Pochhammer: return "Pochhammer(" + a.to_string() + ", " + b.to_string() + ")";
    case Kind::Power: return "(" + rat_to_string(base) + ")^(" + a.to_string() + ")";
  }
  return "";
}

std::string TermAST::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& a : atoms) {
    const int e = a.exponent;
    if (e == 0) continue;
    if (first) {
      if (e < 0) os << "1/";
    } else {
      os << (e < 0 ? " / " : " * ");
    }
    first = false;
    os << a.to_string();
    if (std::abs(e) != 1) os << "^" << std::abs(e);
  }
  if (first) return "1";
  return os.str();
}

TermAST parse_term(const std::string& input) {
  Value v = Parser(input).parse_all();
  if (v.rat.is_zero()) throw SyntaxError(0, "nonzero term");
  TermAST ast;
  if (!v.rat.is_one()) {
    Atom r;
    r.kind = Atom::Kind::Rational;
    r.rational = v.rat;
    ast.atoms.push_back(r);
  }
  for (const auto& a : v.atoms)
    if (a.exponent != 0) ast.atoms.push_back(a);
  return ast;
}

RatXY parse_rational(const std::string& input) {
  Value v = Parser(input).parse_all();
  if (!v.pure()) throw SyntaxError(0, "rational function in x and y");
  return v.rat;
}

HyperTerm shift_quotients(const TermAST& ast) {
  RatXY f(1), g(1);
  for (const auto& a : ast.atoms) {
    RatXY qx(1), qy(1);
    if (a.kind == Atom::Kind::Rational) {
      qx = a.rational.shift_x(Rat(1)) / a.rational;
      qy = a.rational.shift_y(1) / a.rational;
    } else if (a.kind == Atom::Kind::Power) {
      if (a.base == 0) throw Error(ErrorCode::ZeroInput, "zero base");
      RatXY c(a.base);
      qx = c.pow(static_cast<int>(a.a.lambda.get_si()));
      qy = c.pow(static_cast<int>(a.a.mu.get_si()));
    } else {
      for (const auto& [L, s] : factorials(a)) {
        qx *= factorial_ratio(L, L.lambda.get_si()).pow(s);
        qy *= factorial_ratio(L, L.mu.get_si()).pow(s);
      }
    }
    f *= qx.pow(a.exponent);
    g *= qy.pow(a.exponent);
  }
  HyperTerm t = HyperTerm::make(f, g);
  t.provenance = std::make_shared<const TermAST>(ast);
  return t;
}

HyperTerm term_from_string(const std::string& input) { return shift_quotients(parse_term(input)); }

HyperTerm term_from_quotients(const std::string& fx, const std::string& gy) {
  return HyperTerm::make(parse_rational(fx), parse_rational(gy));
}

std::optional<ProperTermSpec> proper_form(const TermAST& ast) {
  ProperTermSpec spec;
  RatXY p(1);
  for (const auto& a : ast.atoms) {
    if (a.kind == Atom::Kind::Rational) {
      p *= a.rational.pow(a.exponent);
      continue;
    }
    if (a.kind == Atom::Kind::Power) {
      // c^(l x + m y + c0): constants go to p only when c0 is an integer
      if (a.a.c.get_den() != 1) return std::nullopt;
      Rat c = a.base;
      auto rpow = [](Rat b, long e) {
        Rat r(1);
        if (e < 0) {
          b = 1 / b;
          e = -e;
        }
        while (e-- > 0) r *= b;
        return r;
      };
      spec.w *= rpow(c, a.a.lambda.get_si() * a.exponent);
      spec.z *= rpow(c, a.a.mu.get_si() * a.exponent);
      p *= RatXY(rpow(c, a.a.c.get_num().get_si() * a.exponent));
      continue;
    }
    for (const auto& [L, s] : factorials(a)) {
      if (L.lambda < 0) return std::nullopt;
      const int e = s * a.exponent;
      const bool num = e > 0;
      ProperFactor pf;
      pf.coeff_x = L.lambda;
      pf.coeff_y = abs(L.mu);
      pf.constant = L.c + 1;
      if (num) pf.kind = L.mu >= 0 ? FactorKind::NumPlus : FactorKind::NumMinus;
      else pf.kind = L.mu >= 0 ? FactorKind::DenPlus : FactorKind::DenMinus;
      for (int k = 0; k < std::abs(e); ++k) spec.factors.push_back(pf);
    }
  }
  if (!p.is_polynomial_y() || !p.num().has_polynomial_coeffs()) return std::nullopt;
  spec.p = PolyXY::from_y(p.num());
  return spec;
}

}  // namespace hyperct
