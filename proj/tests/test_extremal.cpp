#include "doctest.h"

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include "rootsum/extremal.hpp"
#include "support.hpp"

using namespace rootsum;

namespace {

// Exact power sum of the reciprocal zeros, packaged as an estimate with a
// zero certified bound (the inputs to the ratio are exact here).
PowerSumEstimate recip_sum(const std::vector<Complex>& roots, int k) {
  Complex s(0.0);
  for (Complex r : roots) s += std::pow(Complex(1.0) / r, k);
  PowerSumEstimate e;
  e.h = k;
  e.value = s;
  e.bound = 0.0;
  e.source = PowerSumEstimate::Source::newton_identities;
  return e;
}

PowerSumEstimate direct_sum(const std::vector<Complex>& roots, int k) {
  Complex s(0.0);
  for (Complex r : roots) s += std::pow(r, k);
  PowerSumEstimate e;
  e.h = k;
  e.value = s;
  e.bound = 0.0;
  e.source = PowerSumEstimate::Source::newton_identities;
  return e;
}

}  // namespace

TEST_CASE("a single zero is recovered exactly at every index") {
  std::vector<Complex> roots{Complex(0.7, -1.3)};
  for (int k = 1; k <= 5; ++k) {
    auto lo = estimate_smallest(recip_sum(roots, k), recip_sum(roots, k + 1));
    CHECK(std::abs(lo.value - roots[0]) <= 1e-14 * std::abs(roots[0]));
    auto hi = estimate_largest(direct_sum(roots, k), direct_sum(roots, k + 1));
    CHECK(std::abs(hi.value - roots[0]) <= 1e-14 * std::abs(roots[0]));
  }
}

TEST_CASE("smallest-zero estimate error respects the separation bound") {
  // zeros 0.1 and 0.9; reciprocal separation 1/9
  std::vector<Complex> roots{Complex(0.1), Complex(0.9)};
  auto est = estimate_smallest(recip_sum(roots, 8), recip_sum(roots, 9), 1.0 / 9.0);
  double err = std::abs(est.value - Complex(0.1));
  CHECK(err == doctest::Approx(2.0584e-9).epsilon(1e-3));
  REQUIRE(est.total_error.has_value());
  CHECK(err <= *est.total_error);
  CHECK(*est.total_error <= 4.65e-9);
  CHECK(est.k == 8);
  CHECK(est.side == ExtremalEstimate::Side::smallest);
}

TEST_CASE("a repeated smallest modulus behaves like a single heavier zero") {
  std::vector<Complex> roots{Complex(0.2), Complex(0.2), Complex(3.0)};
  auto est = estimate_smallest(recip_sum(roots, 6), recip_sum(roots, 7), 0.2 / 3.0, 2);
  CHECK(est.m == 2);
  CHECK(std::abs(est.value - Complex(0.20000000819)) <= 1e-11);
  CHECK(std::abs(est.value - Complex(0.2)) <= *est.total_error);
}

TEST_CASE("largest-zero estimate error respects the separation bound") {
  std::vector<Complex> roots{Complex(2.0), Complex(3.0)};
  auto est = estimate_largest(direct_sum(roots, 8), direct_sum(roots, 9), 2.0 / 3.0);
  CHECK(std::abs(est.value - Complex(20195.0 / 6817.0)) <= 1e-12);
  double err = std::abs(est.value - Complex(3.0));
  CHECK(err == doctest::Approx(0.03755).epsilon(1e-3));
  REQUIRE(est.total_error.has_value());
  CHECK(err <= *est.total_error);
  CHECK(*est.total_error < 0.25);
}

TEST_CASE("unseparated moduli make the ratio denominator vanish") {
  // zeros 1 and -1: every odd power sum cancels exactly
  std::vector<Complex> roots{Complex(1.0), Complex(-1.0)};
  CHECK_THROWS_AS(estimate_smallest(recip_sum(roots, 2), recip_sum(roots, 3)),
                  DivByZeroError);
  CHECK_THROWS_AS(estimate_largest(direct_sum(roots, 3), direct_sum(roots, 4)),
                  DivByZeroError);
}

TEST_CASE("operands must carry consecutive power indices") {
  std::vector<Complex> roots{Complex(0.5), Complex(2.0)};
  CHECK_THROWS_AS(estimate_smallest(recip_sum(roots, 3), recip_sum(roots, 5)), DomainError);
  CHECK_THROWS_AS(estimate_largest(direct_sum(roots, 3), direct_sum(roots, 3)), DomainError);
}

TEST_CASE("gamma_bound closed form and edge cases") {
  CHECK(gamma_bound(0.5, 10) == doctest::Approx(2.0 / 1023.0).epsilon(1e-15));
  CHECK(gamma_bound(0.0, 5) == 0.0);
  CHECK(std::isinf(gamma_bound(0.5, 0)));  // delta^0 = 1: no information
  CHECK(std::isinf(gamma_bound(0.9999, 0)));
  CHECK_THROWS_AS(gamma_bound(1.0, 3), DomainError);
  CHECK_THROWS_AS(gamma_bound(-0.1, 3), DomainError);
  // monotone decreasing in k
  for (int k = 1; k < 20; ++k) CHECK(gamma_bound(0.7, k + 1) < gamma_bound(0.7, k));
}

TEST_CASE("choose_k returns the minimal index meeting the tolerance") {
  int k = choose_k(0.5, 10);
  CHECK(k == 12);
  CHECK(gamma_bound(0.5, k) <= std::ldexp(1.0, -10));
  CHECK(gamma_bound(0.5, k - 1) > std::ldexp(1.0, -10));

  k = choose_k(0.1, 20);
  CHECK(k == 7);
  CHECK(gamma_bound(0.1, k) <= std::ldexp(1.0, -20));
  CHECK(gamma_bound(0.1, k - 1) > std::ldexp(1.0, -20));

  CHECK(choose_k(0.5, 0) >= 1);
  CHECK_THROWS_AS(choose_k(0.0, 10), DomainError);
  CHECK_THROWS_AS(choose_k(1.0, 10), DomainError);
}

TEST_CASE("total_error adds the two contributions and rejects negatives") {
  CHECK(total_error(1e-6, 2e-7) == doctest::Approx(1.2e-6));
  CHECK(total_error(0.0, 0.0) == 0.0);
  CHECK_THROWS_AS(total_error(-1e-9, 0.0), DomainError);
  CHECK_THROWS_AS(total_error(0.0, -1e-9), DomainError);
}

TEST_CASE("operand bounds propagate into the total error") {
  std::vector<Complex> roots{Complex(0.25), Complex(2.0)};
  PowerSumEstimate num = recip_sum(roots, 6);
  PowerSumEstimate den = recip_sum(roots, 7);
  num.bound = 1e-9;
  den.bound = 2e-9;
  auto est = estimate_smallest(num, den, 0.125);
  double v = std::abs(est.value);
  double expect = gamma_bound(0.125, 6) * v + (1e-9 + v * 2e-9) / std::abs(den.value);
  REQUIRE(est.total_error.has_value());
  CHECK(*est.total_error == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("estimate error decays geometrically with the power index") {
  std::vector<Complex> roots{Complex(0.3, 0.1), Complex(-0.2, 1.1), Complex(2.4, -0.7)};
  double rd = testsupport::min_modulus(roots);
  // reciprocal-side separation: second smallest modulus over smallest
  std::vector<double> mods;
  for (Complex r : roots) mods.push_back(std::abs(r));
  std::sort(mods.begin(), mods.end());
  double delta = mods[0] / mods[1];
  for (int k = 4; k <= 12; ++k) {
    auto est = estimate_smallest(recip_sum(roots, k), recip_sum(roots, k + 1), delta);
    double err = std::abs(std::abs(est.value) - rd);
    // the relative error is controlled by the geometric factor at every k
    // (it need not decrease monotonically: the phases make it oscillate)
    CHECK(err <= gamma_bound(delta, k) * rd * 1.01);
  }
}
