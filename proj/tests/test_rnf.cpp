#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hyperct/errors.hpp"
#include "hyperct/rnf.hpp"
#include "hyperct/shiftstruct.hpp"
#include "support.hpp"

using namespace hyperct;
using namespace testsupport;

namespace {
const RatX X = RatX::x();
const PolyY Y = PolyY::y();

RatXY quotient_of(const KernelShell& ks) { return RatXY(ks.u, ks.v) * ks.S.shift_y(1) / ks.S; }
}  // namespace

TEST_CASE("rnf examples") {
  auto a = rnf(RatXY(lin(0, 1, 2), Y));
  CHECK(a.K == RatXY(1));
  CHECK(a.S == RatXY(Y * lin(0, 1, 1)));
  auto b = rnf(RatXY(lin(1, -1, 0), lin(0, 1, 1)));
  CHECK(b.K == RatXY(lin(1, -1, 0), lin(0, 1, 1)));
  CHECK(b.S == RatXY(1));
  auto c = rnf(RatXY(lin(0, 1, 1).pow(2), Y));
  CHECK(c.K == RatXY(lin(0, 1, 1)));
  CHECK(c.S == RatXY(Y));
  CHECK_THROWS_AS(rnf(RatXY()), Error);
}

TEST_CASE("rnf on random quotients") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> c(-4, 4), dir(0, 3);
  auto factor = [&]() -> PolyY {
    switch (dir(rng)) {
      case 0: return lin(1, 1, c(rng));
      case 1: return lin(0, 1, c(rng));
      case 2: return lin(2, -1, c(rng));
      default: return Y * Y + PolyY(X);
    }
  };
  for (int it = 0; it < 40; ++it) {
    RatXY f = RatXY(factor() * factor() * factor(), factor() * factor()) * RatXY(RatX(c(rng) == 0 ? 1 : 3));
    KernelShell ks = rnf(f);
    CHECK(is_shift_reduced(ks.K));
    CHECK(ks.v.is_monic());
    CHECK(poly_gcd_y(ks.u, ks.v).is_one());
    CHECK(quotient_of(ks) == f);
    KernelShell n = normalize_kernel_shift_free(ks);
    CHECK(quotient_of(n) == f);
    if (n.u.degree() > 0) CHECK(is_shift_free_y(n.u));
    if (n.v.degree() > 0) CHECK(is_shift_free_y(n.v));
  }
}

TEST_CASE("kernel of simple terms") {
  HyperTerm binom = HyperTerm::make(RatXY(lin(1, 0, 1), lin(1, -1, 1)), RatXY(lin(1, -1, 0), lin(0, 1, 1)));
  auto k = kernel_shell_of_term(binom);
  CHECK(k.K == RatXY(lin(1, -1, 0), lin(0, 1, 1)));
  CHECK(k.S == RatXY(1));
  HyperTerm fact = HyperTerm::make(RatXY(1), RatXY(lin(0, 1, 1)));
  CHECK(kernel_shell_of_term(fact).K == RatXY(lin(0, 1, 1)));
}

TEST_CASE("moves") {
  KernelShell k1 = KernelShell::make(PolyY(1), Y * lin(0, 1, 2), RatXY(1));
  auto m1 = move_denominator_factor(k1, Y, 1);
  CHECK(m1.K == RatXY(PolyY(1), lin(0, 1, 1) * lin(0, 1, 2)));
  CHECK(m1.S == RatXY(Y));
  KernelShell k2 = KernelShell::make(lin(1, -1, 0), lin(0, 1, 1), RatXY(1));
  auto m2 = move_denominator_factor(k2, lin(0, 1, 1), 1);
  CHECK(m2.K == RatXY(lin(1, -1, 0), lin(0, 1, 2)));
  CHECK(m2.S == RatXY(lin(0, 1, 1)));
  CHECK_THROWS_AS(move_denominator_factor(k2, lin(0, 1, 1), 2), Error);
  KernelShell k3 = KernelShell::make(lin(0, 1, 1), PolyY(1), RatXY(1));
  auto m3 = move_numerator_factor(k3, lin(0, 1, 1), 1);
  CHECK(m3.K == RatXY(Y));
  CHECK(m3.S == RatXY(Y));
  KernelShell k4 = KernelShell::make(Y * lin(0, 1, 3), lin(1, 1, 0), RatXY(1));
  auto m4 = move_numerator_factor(k4, lin(0, 1, 3), 1);
  CHECK(divides(lin(0, 1, 2), m4.u));
  CHECK_THROWS_AS(move_numerator_factor(k3, Y, 1), Error);
  for (const auto* m : {&m1, &m2, &m3, &m4}) (void)m;
  CHECK(quotient_of(m1) == quotient_of(k1));
  CHECK(quotient_of(m2) == quotient_of(k2));
  CHECK(quotient_of(m3) == quotient_of(k3));
  CHECK(quotient_of(m4) == quotient_of(k4));
}

TEST_CASE("shift-free kernel normalization") {
  KernelShell k1 = KernelShell::make(PolyY(1), Y * lin(0, 1, 2), RatXY(1));
  auto n1 = normalize_kernel_shift_free(k1);
  CHECK(n1.K == RatXY(PolyY(1), lin(0, 1, 2).pow(2)));
  CHECK(n1.S == RatXY(Y * lin(0, 1, 1)));
  KernelShell k2 = KernelShell::make(lin(1, 1, 0), lin(0, 1, 5), RatXY(1));
  CHECK(normalize_kernel_shift_free(k2).K == k2.K);
  KernelShell k3 = KernelShell::make(Y * lin(0, 1, 1), PolyY(1), RatXY(1));
  auto n3 = normalize_kernel_shift_free(k3);
  CHECK(n3.K == RatXY(Y * Y));
  CHECK(quotient_of(n3) == quotient_of(k3));
  CHECK(is_shift_free_y(n3.u));
}
