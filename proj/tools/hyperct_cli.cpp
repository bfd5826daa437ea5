#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "hyperct/bounds.hpp"
#include "hyperct/errors.hpp"
#include "hyperct/frontend.hpp"
#include "hyperct/reduction.hpp"
#include "hyperct/rnf.hpp"
#include "hyperct/shiftstruct.hpp"
#include "hyperct/telescoper.hpp"

using namespace hyperct;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitNoTelescoper = 2;
constexpr int kExitInput = 3;
constexpr int kExitOrderCap = 4;

struct Options {
  std::string term, fx, gy, format = "text";
  std::optional<int> max_order;
  unsigned seed = 1;
  int count = 50;
  bool verify = false;
  std::string coeffs, certificate;
};

HyperTerm read_term(const Options& o) {
  if (!o.term.empty()) {
    if (!o.fx.empty() || !o.gy.empty()) throw CLI::ValidationError("--term", "give either --term or --fx/--gy");
    return term_from_string(o.term);
  }
  if (o.fx.empty() || o.gy.empty()) throw CLI::ValidationError("--term", "a term is required (--term or --fx and --gy)");
  return term_from_quotients(o.fx, o.gy);
}

std::string input_text(const Options& o) {
  return !o.term.empty() ? o.term : "fx=" + o.fx + "; gy=" + o.gy;
}

json residual_json(const ResidualForm& r) {
  return {{"a", r.a.to_string()}, {"b", r.b.to_string()}, {"q", r.q.to_string()}};
}

json bounds_json(const BoundReport& rep) {
  json j;
  j["lower"] = rep.lower ? json(*rep.lower) : json(nullptr);
  j["upper"] = rep.upper;
  j["upper_closed_form"] = rep.upper_closed_form;
  j["b_az"] = rep.b_az ? json(*rep.b_az) : json(nullptr);
  j["b_al"] = rep.b_al ? json(*rep.b_al) : json(nullptr);
  return j;
}

void emit(const Options& o, const json& j) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      for (const auto& [k2, v2] : v.items())
        std::cout << k << "." << k2 << ": " << (v2.is_string() ? v2.get<std::string>() : v2.dump()) << "\n";
    } else if (v.is_array()) {
      std::cout << k << ":";
      for (const auto& e : v) std::cout << " [" << (e.is_string() ? e.get<std::string>() : e.dump()) << "]";
      std::cout << "\n";
    } else {
      std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

json base_report(const Options& o, const KernelShell& ks) {
  json j;
  j["input"] = input_text(o);
  j["kernel"] = {{"u", ks.u.to_string()}, {"v", ks.v.to_string()}};
  j["shell"] = ks.S.to_string();
  return j;
}

int cmd_summable(const Options& o) {
  HyperTerm T = read_term(o);
  SummabilityResult s = is_summable(T);
  json j = base_report(o, s.ks);
  j["residual"] = residual_json(s.reduction.r);
  j["status"] = s.summable ? "summable" : "not summable";
  // T = Delta_y(c*T) + (r/S)*T with c = g/S
  j["certificate"] = s.summable ? json((s.reduction.g / s.ks.S).to_string()) : json(nullptr);
  emit(o, j);
  return kExitOk;
}

int cmd_reduce(const Options& o) {
  HyperTerm T = read_term(o);
  KernelShell ks = kernel_shell_of_term(T);
  ReductionResult red = shell_reduce(ks.S, ks);
  if (o.verify && ks.K * red.g.shift_y(1) - red.g + red.r.value() != ks.S) return kExitFailed;
  json j = base_report(o, ks);
  j["g"] = red.g.to_string();
  j["residual"] = residual_json(red.r);
  j["status"] = red.r.is_zero() ? "summable" : "not summable";
  emit(o, j);
  return kExitOk;
}

int cmd_telescope(const Options& o) {
  HyperTerm T = read_term(o);
  TelescopeOutcome out = reduction_ct(T, o.max_order);
  KernelShell ks = kernel_shell_of_term(T);
  json j = base_report(o, ks);
  j["residual"] = residual_json(out.initial);
  if (out.status == TelescopeOutcome::Status::NoTelescoper) {
    j["status"] = "none";
    j["evidence"] = out.evidence.to_string();
    j["telescoper"] = nullptr;
    j["certificate"] = nullptr;
    j["bounds"] = nullptr;
    emit(o, j);
    return kExitNoTelescoper;
  }
  j["bounds"] = bounds_json(bounds_report(T));
  if (out.status == TelescopeOutcome::Status::OrderCapExceeded) {
    j["status"] = "order cap exceeded";
    j["telescoper"] = nullptr;
    j["certificate"] = nullptr;
    emit(o, j);
    return kExitOrderCap;
  }
  const Telescoper& L = *out.telescoper;
  if (o.verify && !verify_telescoper(T, L)) return kExitFailed;
  json coeffs = json::array();
  for (const auto& e : L.e) coeffs.push_back(e.to_string("x"));
  j["telescoper"] = {{"order", L.order}, {"coefficients", coeffs}};
  j["certificate"] = L.certificate_t.to_string();
  j["status"] = L.order == 0 ? "summable" : "found";
  emit(o, j);
  return kExitOk;
}

int cmd_bounds(const Options& o) {
  HyperTerm T = read_term(o);
  KernelShell ks = kernel_shell_of_term(T);
  BoundReport rep;
  try {
    rep = bounds_report(T);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NoTelescoperExists) throw;
    json j = base_report(o, ks);
    j["status"] = "none";
    j["bounds"] = nullptr;
    emit(o, j);
    return kExitNoTelescoper;
  }
  json j = base_report(o, ks);
  j["bounds"] = bounds_json(rep);
  j["b"] = rep.b.to_string();
  j["B"] = rep.B.to_string();
  j["dim_WK"] = rep.dim_wk;
  j["status"] = rep.lower ? "found" : "summable";
  emit(o, j);
  return kExitOk;
}

int cmd_verify(const Options& o) {
  HyperTerm T = read_term(o);
  std::vector<PolyX> e;
  std::stringstream ss(o.coeffs);
  for (std::string item; std::getline(ss, item, ';');) {
    RatXY c = parse_rational(item);
    if (!c.is_polynomial_y() || c.num().degree() > 0 || !c.num().coeff(0).is_polynomial())
      throw Error(ErrorCode::SyntaxError, "operator coefficient must be a polynomial in x: " + item);
    e.push_back(c.num().coeff(0).num());
  }
  if (e.empty()) throw Error(ErrorCode::SyntaxError, "--coeffs is empty");
  RatXY c = parse_rational(o.certificate.empty() ? "0" : o.certificate);
  const bool ok = verify_telescoper(T, e, c);
  json j;
  j["input"] = input_text(o);
  j["status"] = ok ? "verified" : "rejected";
  emit(o, j);
  return ok ? kExitOk : kExitFailed;
}

// Randomized summable terms Delta_y(R*H) must reduce to zero.
int cmd_selftest(const Options& o) {
  std::mt19937 rng(o.seed);
  std::uniform_int_distribution<int> c(-3, 3), d(1, 3);
  int failures = 0;
  for (int i = 0; i < o.count; ++i) {
    PolyY u = PolyY::linear(Rat(c(rng)), Rat(d(rng)), Rat(c(rng)));
    PolyY v = PolyY::linear(Rat(d(rng)), Rat(1), Rat(c(rng)));
    if (!is_shift_reduced(RatXY(u, v))) continue;
    KernelShell ks = KernelShell::make(u, v, RatXY(1));
    RatXY R(PolyY::linear(Rat(c(rng)), Rat(c(rng)), Rat(d(rng))), PolyY::linear(Rat(d(rng)), Rat(d(rng)), Rat(c(rng))));
    RatXY S = ks.K * R.shift_y(1) - R;
    if (!shell_reduce(S, ks).r.is_zero()) ++failures;
  }
  json j;
  j["seed"] = o.seed;
  j["count"] = o.count;
  j["failures"] = failures;
  j["identity_checks"] = reduction_identity_checks();
  j["status"] = failures == 0 ? "ok" : "failed";
  emit(o, j);
  return failures == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Creative telescoping for bivariate hypergeometric terms"};
  app.require_subcommand(1);
  Options o;
  auto add_term = [&](CLI::App* sub) {
    sub->add_option("--term", o.term, "term expression, e.g. \"Binomial(x,y)\"");
    sub->add_option("--fx", o.fx, "x-shift quotient sigma_x(T)/T");
    sub->add_option("--gy", o.gy, "y-shift quotient sigma_y(T)/T");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--verify", o.verify, "re-check the output identity before printing");
  };
  std::map<std::string, std::function<int(const Options&)>> handlers = {
      {"summable", cmd_summable}, {"reduce", cmd_reduce}, {"telescope", cmd_telescope},
      {"bounds", cmd_bounds},     {"verify", cmd_verify}, {"selftest", cmd_selftest}};
  std::map<std::string, CLI::App*> subs;
  subs["summable"] = app.add_subcommand("summable", "decide summability w.r.t. y");
  subs["reduce"] = app.add_subcommand("reduce", "print the additive decomposition T = Delta_y(gH) + rH");
  subs["telescope"] = app.add_subcommand("telescope", "compute a minimal telescoper");
  subs["bounds"] = app.add_subcommand("bounds", "order bounds for minimal telescopers");
  subs["verify"] = app.add_subcommand("verify", "check an operator and certificate");
  subs["selftest"] = app.add_subcommand("selftest", "randomized summability self-test");
  for (const auto& name : {"summable", "reduce", "telescope", "bounds", "verify"}) add_term(subs[name]);
  subs["telescope"]->add_option("--max-order", o.max_order, "give up above this order");
  subs["verify"]->add_option("--coeffs", o.coeffs, "operator coefficients e_0;e_1;... in x")->required();
  subs["verify"]->add_option("--certificate", o.certificate, "rational c with L(T) = Delta_y(c*T)");
  subs["selftest"]->add_option("--seed", o.seed, "random seed");
  subs["selftest"]->add_option("--count", o.count, "number of random terms");
  subs["selftest"]->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitInput;
  }
  try {
    for (const auto& [name, sub] : subs)
      if (sub->parsed()) return handlers[name](o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.code() == ErrorCode::NoTelescoperExists) return kExitNoTelescoper;
    if (e.code() == ErrorCode::Internal) return kExitFailed;
    return kExitInput;
  }
  return kExitInput;
}
