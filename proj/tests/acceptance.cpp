// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "hyperct/bounds.hpp"
#include "hyperct/errors.hpp"
#include "hyperct/frontend.hpp"
#include "hyperct/reduction.hpp"
#include "hyperct/rnf.hpp"
#include "hyperct/shiftstruct.hpp"
#include "hyperct/telescoper.hpp"
#include "support.hpp"

using namespace hyperct;
using namespace testsupport;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "first failure: " << what << "; ";
      pass = false;
    }
  }
};

using Check = std::function<void(Outcome&)>;

void sharper_upper(Outcome& o) {
  const std::pair<int, int> cases[] = {{1, 2}, {2, 3}, {1, 3}};
  for (auto [a, b] : cases) {
    std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    auto t0 = Clock::now();
    HyperTerm T = term_from_string(sharper_upper_term(a, b, true));
    TelescopeOutcome out = reduction_ct(T);
    BoundReport rep = bounds_report(T);
    double dt = seconds_since(t0);
    o.require(out.telescoper && out.telescoper->order == b, tag + " order");
    o.require(out.telescoper && verify_telescoper(T, *out.telescoper), tag + " verify");
    o.require(rep.upper == b, tag + " upper");
    o.require(rep.b_az == a + b, tag + " B_AZ");
    o.require(rep.lower == b, tag + " lower");
    o.require(dt < 10.0, tag + " runtime");
    o.detail << tag << ": order " << (out.telescoper ? out.telescoper->order : -1) << ", upper " << rep.upper
             << ", B_AZ " << (rep.b_az ? *rep.b_az : -1) << ", lower " << (rep.lower ? *rep.lower : -1) << ", "
             << dt << "s; ";
  }
}

void sharper_lower(Outcome& o) {
  for (int a = 2; a <= 4; ++a) {
    std::string tag = "alpha=" + std::to_string(a);
    auto t0 = Clock::now();
    HyperTerm T = term_from_string(sharper_lower_term(a));
    TelescopeOutcome out = reduction_ct(T);
    BoundReport rep = bounds_report(T);
    double dt = seconds_since(t0);
    o.require(rep.lower == a, tag + " lower");
    o.require(rep.b_al == 2, tag + " B_AL");
    o.require(out.telescoper && out.telescoper->order == a, tag + " order");
    o.require(out.telescoper && verify_telescoper(T, *out.telescoper), tag + " verify");
    o.require(dt < 60.0, tag + " runtime");
    o.detail << tag << ": lower " << (rep.lower ? *rep.lower : -1) << ", B_AL " << (rep.b_al ? *rep.b_al : -1)
             << ", order " << (out.telescoper ? out.telescoper->order : -1) << ", " << dt << "s; ";
  }
}

void binomial(Outcome& o) {
  const std::string text = "Binomial(x,y)";
  HyperTerm T = term_from_string(text);
  o.require(!is_summable(T).summable, "summable");
  TelescopeOutcome out = reduction_ct(T);
  o.require(out.telescoper.has_value(), "no telescoper");
  if (!out.telescoper) return;
  const Telescoper& L = *out.telescoper;
  o.require(L.order == 1, "order");
  o.require(L.e == std::vector<PolyX>{PolyX(Rat(-2)), PolyX(Rat(1))}, "operator is not S_x - 2");
  o.require(verify_telescoper(T, L), "exact identity");

  // sum_y binom(x, y) = 2^x and the recurrence e0 s(x) + e1 s(x+1) = 0
  const TermAST& ast = *T.provenance;
  auto s = [&](long x) {
    Rat acc = 0;
    for (long y = 0; y <= x; ++y) acc += *eval_term(ast, x, y);
    return acc;
  };
  for (long x = 0; x <= 20; ++x) {
    Rat sx = s(x);
    o.require(sx == Rat(Int(1) << static_cast<mp_bitcnt_t>(x)), "sum at x=" + std::to_string(x));
    if (x < 20) o.require(L.e[0].eval(Rat(x)) * sx + L.e[1].eval(Rat(x)) * s(x + 1) == 0, "recurrence");
  }
  // certificate identity at integer points: sum_i e_i T(x+i, y) = c(y+1) T(y+1) - c T
  int points = 0;
  for (long x = 0; x <= 12; ++x)
    for (long y = 0; y < x; ++y) {
      auto t = eval_term(ast, x, y), t1 = eval_term(ast, x, y + 1), tx = eval_term(ast, x + 1, y);
      if (!t || !t1 || !tx) continue;
      try {
        Rat c0 = L.certificate_t.eval(Rat(x), Rat(y)), c1 = L.certificate_t.eval(Rat(x), Rat(y + 1));
        Rat lhs = L.e[0].eval(Rat(x)) * *t + L.e[1].eval(Rat(x)) * *tx;
        o.require(lhs == c1 * *t1 - c0 * *t, "certificate at a point");
        ++points;
      } catch (const Error&) {
      }
    }
  o.require(points > 20, "too few numeric points");
  o.detail << "L = S_x - 2, certificate " << L.certificate_t.to_string() << ", " << points
           << " numeric points, sums checked to x = 20";
}

// random H from factorial atoms; its y-quotient gives a random shift-reduced kernel after rnf
HyperTerm random_h(std::mt19937& rng) {
  std::uniform_int_distribution<int> lam(0, 2), mu(-2, 2), c(0, 3), coin(0, 1), n(1, 2);
  std::string t = "1";
  for (int i = n(rng); i > 0; --i) {
    int m = mu(rng);
    if (m == 0) m = 1;
    t += coin(rng) ? " * " : " / ";
    t += "Factorial(" + std::to_string(lam(rng)) + "*x + " + std::to_string(m) + "*y + " + std::to_string(c(rng)) + ")";
  }
  if (coin(rng)) t += " * 2^(x + 2*y)";
  return term_from_string(t);
}

HyperTerm times_rational(const HyperTerm& H, const RatXY& S) {
  return HyperTerm::make(S.shift_x(Rat(1)) / S * H.f, S.shift_y(1) / S * H.g);
}

bool identity_holds(const SummabilityResult& sr) {
  RatXY g1 = sr.reduction.g.shift_y(1);
  const ResidualForm& r = sr.reduction.r;
  return fractions_sum_to_zero({{sr.ks.u * g1.num(), sr.ks.v * g1.den()},
                                {-sr.reduction.g.num(), sr.reduction.g.den()},
                                {r.a, r.b},
                                {r.q, sr.ks.v},
                                {-sr.ks.S.num(), sr.ks.S.den()}});
}

void summability(Outcome& o) {
  std::mt19937 rng(2024);
  int summable = 0, perturbed = 0;
  const RatXY bump(PolyY(RatX(1)), PolyY::y() * PolyY::y() + PolyY(RatX::x() * RatX::x() + RatX(3)));
  while (summable < 200) {
    HyperTerm H = random_h(rng);
    RatXY R = random_rat(rng, 1, 2);
    if (R.is_zero()) continue;
    // T = Delta_y(R*H) = (sigma_y(R) g_H - R) H
    RatXY S = R.shift_y(1) * H.g - R;
    if (S.is_zero()) continue;
    SummabilityResult a = is_summable(times_rational(H, S));
    o.require(a.summable && a.reduction.r.is_zero(), "summable term with nonzero residual");
    o.require(identity_holds(a), "identity for a summable term");
    ++summable;
    SummabilityResult b = is_summable(times_rational(H, S + bump));
    o.require(!b.summable && !b.reduction.r.is_zero(), "perturbed term with zero residual");
    o.require(identity_holds(b), "identity for a perturbed term");
    ++perturbed;
  }
  o.detail << summable << " summable, " << perturbed << " perturbed";
}

void shift_relation(Outcome& o) {
  int terms = 0, pairs = 0;
  for (const auto& text : proper_corpus(29, 50)) {
    HyperTerm T = term_from_string(text);
    KernelShell ks = kernel_shell_of_term(T);
    TelescoperSystem sys = residual_sequence(T, ks, 4);
    const PolyY& b0 = sys.reductions[0].r.b;
    for (int i = 1; i <= 4; ++i, ++pairs)
      o.require(shift_related_y(sys.reductions[static_cast<std::size_t>(i)].r.b, b0.shift_x(Rat(i))), text);
    ++terms;
  }
  o.detail << terms << " terms, " << pairs << " pairs (b_i, sigma_x^i(b_0))";
}

void sandwich(Outcome& o) {
  int n = 0, with_az = 0, with_al = 0, tight_lower = 0, tight_upper = 0;
  std::map<int, int> orders;
  for (const auto& text : proper_corpus(7, 100)) {
    HyperTerm T = term_from_string(text);
    TelescopeOutcome out = reduction_ct(T);
    o.require(out.telescoper.has_value(), "no telescoper: " + text);
    if (!out.telescoper) continue;
    BoundReport r = bounds_report(T);
    int order = out.telescoper->order;
    ++orders[order];
    if (r.lower) o.require(*r.lower <= order, "lower > order: " + text);
    o.require(order <= r.upper, "order > upper: " + text);
    if (r.b_az) {
      ++with_az;
      o.require(r.upper <= *r.b_az, "upper > B_AZ: " + text);
    }
    if (r.lower && r.b_al) {
      ++with_al;
      o.require(*r.lower >= *r.b_al, "lower < B_AL: " + text);
    }
    if (r.lower && *r.lower == order) ++tight_lower;
    if (r.upper == order) ++tight_upper;
    ++n;
  }
  o.detail << n << " terms, " << with_az << " with B_AZ, " << with_al << " with B_AL; lower tight " << tight_lower
           << ", upper tight " << tight_upper << "; orders";
  for (auto [k, c] : orders) o.detail << " " << k << ":" << c;
}

int run_cli(const std::string& args) {
  std::string cmd = std::string(HYPERCT_CLI) + " " + args + " > /dev/null 2>&1";
  int st = std::system(cmd.c_str());
  return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

void nonexistence(Outcome& o) {
  for (const std::string text : {"1/(x^2+y^2)", "1/(x^2+y^3)"}) {
    TelescopeOutcome out = reduction_ct(term_from_string(text));
    o.require(out.status == TelescopeOutcome::Status::NoTelescoper, text + " status");
    o.require(!detect_integer_linear(out.evidence).has_value(), text + " evidence");
    int code = run_cli("telescope --term '" + text + "'");
    o.require(code == 2, text + " exit code " + std::to_string(code));
    o.detail << text << ": evidence " << out.evidence.to_string() << ", exit " << code << "; ";
  }
}

void kernel_dimension(Outcome& o) {
  std::mt19937 rng(97);
  std::uniform_int_distribution<int> c(-3, 3), n(0, 3), dir(0, 3), coin(0, 1);
  auto factor = [&](bool monic) -> PolyY {
    if (monic) return lin(0, 1, c(rng)) + PolyY(RatX(PolyX::linear(Rat(c(rng)), Rat(0))));
    switch (dir(rng)) {
      case 0: return lin(1, 1, c(rng));
      case 1: return lin(1, -2, c(rng));
      case 2: return lin(0, 1, c(rng));
      default: return lin(2, 3, c(rng));
    }
  };
  int kernels = 0, equal = 0;
  while (kernels < 100) {
    // half of the kernels share degree and leading coefficient, where the bracket matters
    bool monic = coin(rng);
    PolyY u(RatX(monic ? 1 : 1 + n(rng))), v(RatX(1));
    int du = n(rng), dv = monic ? du : n(rng);
    for (int i = 0; i < du; ++i) u *= factor(monic);
    for (int i = 0; i < dv; ++i) v *= factor(monic);
    if (u == v || !poly_gcd_y(u, v).is_one()) continue;
    if (!is_shift_reduced(RatXY(u, v))) continue;
    KernelShell ks = KernelShell::make(u, v, RatXY(1));
    int dim = complement_basis(ks, 0).dimension();
    int m = std::max({ks.u.degree(), ks.v.degree(), 0});
    PolyY diff = ks.v - ks.u;
    int bracket = diff.degree() <= ks.u.degree() - 1 ? 1 : 0;
    int bound = m - bracket;
    // independent count of unattainable degrees far beyond the bound
    int counted = 0;
    for (int l : complement_basis(ks, 3 * m + 12).basis()) counted += l >= 0 ? 1 : 0;
    o.require(counted == dim, "dimension differs from a direct count");
    o.require(dim <= bound, "dim W_K above the bound for " + RatXY(u, v).to_string());
    if (dim == bound) ++equal;
    ++kernels;
  }
  o.detail << kernels << " kernels, equality in " << equal << " (" << equal << "%)";
}

}  // namespace

int main() {
  const std::pair<int, Check> checks[] = {
      {1, sharper_upper}, {2, sharper_lower}, {3, binomial},     {4, summability},   {6, shift_relation},
      {7, sandwich},      {8, nonexistence},  {9, kernel_dimension},
  };
  std::map<int, Outcome> results;
  for (const auto& [id, check] : checks) {
    auto t0 = Clock::now();
    Outcome& o = results[id];
    try {
      check(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    o.detail << " [" << seconds_since(t0) << "s]";
  }
  // every shell reduction above re-verified its identity
  Outcome& five = results[5];
  long checked = reduction_identity_checks(), failed = reduction_identity_failures();
  five.require(checked > 0 && failed == 0, "identity failures");
  five.detail << checked << " identity checks, " << failed << " failures";

  const char* names[] = {"",
                         "order-bound example with (alpha, beta) parameters",
                         "lower-bound example, alpha = 2..4",
                         "binomial sum",
                         "summability soundness",
                         "reduction identity",
                         "b_i shift-related to sigma_x^i(b_0)",
                         "sandwich and dominance",
                         "nonexistence",
                         "dim W_K bound"};
  bool all = true;
  for (int id = 1; id <= 9; ++id) {
    const Outcome& o = results[id];
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << names[id] << " -- " << o.detail.str()
              << "\n";
  }
  return all ? 0 : 1;
}
