#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rootsum/radii.hpp"
#include "support.hpp"

using namespace rootsum;

TEST_CASE("coefficient bounds on a factored quadratic") {
  // (x-1)(x-4) = x^2 - 5x + 4
  Poly p({{4, 0}, {-5, 0}, {1, 0}});
  auto [small, large] = coeff_radii_bounds(p);
  // r- = min(4/5, sqrt(4)) = 0.8
  CHECK(small.lower == doctest::Approx(0.4));
  CHECK(small.upper == doctest::Approx(1.6));
  CHECK(small.lower <= 1.0);
  CHECK(1.0 <= small.upper);
  // r+ = max(5, 2) = 5
  CHECK(large.lower == doctest::Approx(2.5));
  CHECK(large.upper == doctest::Approx(10.0));
  CHECK(large.lower <= 4.0);
  CHECK(4.0 <= large.upper);
}

TEST_CASE("coefficient bounds on degree one and on a zero at the origin") {
  Complex a(3.0, -4.0);  // |a| = 5
  Poly lin = Poly::from_roots({a});
  auto [s1, l1] = coeff_radii_bounds(lin);
  CHECK(s1.lower == doctest::Approx(2.5));
  CHECK(s1.upper == doctest::Approx(5.0));
  CHECK(l1.lower == doctest::Approx(5.0));
  CHECK(l1.upper == doctest::Approx(10.0));

  Poly cubed({{0, 0}, {0, 0}, {0, 0}, {1, 0}});  // x^3
  auto [s2, l2] = coeff_radii_bounds(cubed);
  CHECK(s2.lower == 0.0);
  CHECK(s2.upper == 0.0);
}

TEST_CASE("coefficient bounds contain the extreme moduli on random instances") {
  for (unsigned long long seed = 1; seed <= 50; ++seed) {
    auto roots = testsupport::random_roots(6, seed, 0.05, 20.0);
    auto [small, large] = coeff_radii_bounds(Poly::from_roots(roots));
    double lo = testsupport::min_modulus(roots);
    double hi = testsupport::max_modulus(roots);
    CHECK(small.lower <= lo * (1 + 1e-12));
    CHECK(lo <= small.upper * (1 + 1e-12));
    CHECK(large.lower <= hi * (1 + 1e-12));
    CHECK(hi <= large.upper * (1 + 1e-12));
  }
}

TEST_CASE("ratio-based nearest-zero radius") {
  Poly p({{-8, 0}, {0, 0}, {0, 0}, {1, 0}});  // x^3 - 8
  NewtonOracle oracle = oracle_from_coeffs(p);

  // c = 0 is a critical point: no information
  RadiusBounds at0 = newton_smallest_bound(oracle, Complex(0.0));
  CHECK(at0.unbounded());

  // c = 1: R(1) = 3/(1-8), bound d/|R| = 7 and the nearest zero is at distance 1
  RadiusBounds at1 = newton_smallest_bound(oracle, Complex(1.0));
  CHECK(at1.upper == doctest::Approx(7.0));
  CHECK(1.0 <= at1.upper);

  // degree 1: the bound is exact
  Complex a(2.0, 1.0);
  NewtonOracle lin = oracle_from_coeffs(Poly::from_roots({a}));
  Complex c(-1.0, 0.5);
  CHECK(newton_smallest_bound(lin, c).upper == doctest::Approx(std::abs(a - c)));

  // centering on a zero reports distance zero
  CHECK(newton_smallest_bound(oracle, Complex(2.0)).upper == 0.0);
}

TEST_CASE("squaring-sharpened bounds tighten with depth and stay valid") {
  Poly p = Poly::from_roots({Complex(2.0), Complex(3.0)});
  double prev_small = 1e300, prev_large_gap = 1e300;
  for (int k = 0; k <= 6; ++k) {
    auto [small, large] = dlg_sharpened_bounds(p, k);
    CHECK(small.lower <= 2.0 * (1 + 1e-12));
    CHECK(2.0 <= small.upper * (1 + 1e-12));
    CHECK(large.lower <= 3.0 * (1 + 1e-12));
    CHECK(3.0 <= large.upper * (1 + 1e-12));
    CHECK(small.upper <= prev_small * (1 + 1e-12));
    CHECK(large.upper - large.lower <= prev_large_gap * (1 + 1e-12));
    prev_small = small.upper;
    prev_large_gap = large.upper - large.lower;
  }
  // three rounds already pin the moduli to a few percent
  auto [s3, l3] = dlg_sharpened_bounds(p, 3);
  CHECK(s3.upper <= 2.0 * 1.2);
  CHECK(l3.lower >= 3.0 / 1.2);
}

TEST_CASE("squaring depth is guarded and degenerate ratios are reported") {
  Poly p = Poly::from_roots({Complex(2.0), Complex(3.0)});
  CHECK_THROWS_AS(dlg_sharpened_bounds(p, 13), DomainError);
  CHECK_THROWS_AS(dlg_sharpened_bounds(p, -1), DomainError);

  // x^2 + 1: the odd coefficients vanish, so level 0 carries no ratio...
  Poly cyc({{1, 0}, {0, 0}, {1, 0}});
  CHECK_THROWS_AS(dlg_sharpened_bounds(cyc, 0), DivByZeroError);
  // ...but one squaring round maps both zeros to -1 and the ratio reappears
  auto [small, large] = dlg_sharpened_bounds(cyc, 1);
  CHECK(small.upper == doctest::Approx(1.0));
  CHECK(large.lower == doctest::Approx(1.0));
  CHECK(small.lower <= 1.0 + 1e-12);
  CHECK(1.0 <= large.upper + 1e-12);
}

TEST_CASE("deep sharpened bounds survive wide moduli via level fallback") {
  auto roots = testsupport::random_roots(12, 77, 0.2, 5.0);
  auto [small, large] = dlg_sharpened_bounds(Poly::from_roots(roots), 12);
  double lo = testsupport::min_modulus(roots);
  double hi = testsupport::max_modulus(roots);
  CHECK(std::isfinite(small.upper));
  CHECK(small.lower <= lo * (1 + 1e-9));
  CHECK(lo <= small.upper * (1 + 1e-9));
  CHECK(large.lower <= hi * (1 + 1e-9));
  CHECK(hi <= large.upper * (1 + 1e-9));
}

TEST_CASE("bisection finds the ordered distances to the zeros") {
  NewtonOracle oracle = oracle_from_coeffs(Poly::from_roots({Complex(3.0), Complex(10.0)}));
  double r1 = radius_bisect(oracle, Complex(0.0), 1, 1.0, 20.0, 20);
  CHECK(r1 == doctest::Approx(3.0).epsilon(1e-4));
  double r2 = radius_bisect(oracle, Complex(0.0), 2, 1.0, 20.0, 20);
  CHECK(r2 == doctest::Approx(10.0).epsilon(1e-4));

  // [4, 20] already contains the first zero: no bracket for j = 1
  CHECK_THROWS_AS(radius_bisect(oracle, Complex(0.0), 1, 4.0, 20.0, 20), BracketError);
  CHECK_THROWS_AS(radius_bisect(oracle, Complex(0.0), 0, 1.0, 20.0, 20), DomainError);
  CHECK_THROWS_AS(radius_bisect(oracle, Complex(0.0), 1, 2.0, 1.0, 20), DomainError);
}

TEST_CASE("an off-axis center separates equally spaced zeros") {
  // x^4 - h^4: four zeros on the circle |x| = h; from a generic center the
  // four distances are distinct and bisection resolves the nearest/farthest.
  const double h = 1.5;
  Poly p({{-h * h * h * h, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}});
  NewtonOracle oracle = oracle_from_coeffs(p);
  std::vector<Complex> zeros{{h, 0}, {-h, 0}, {0, h}, {0, -h}};
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 5; ++trial) {
    Complex c(0.3 + 0.2 * u(rng), 0.4 + 0.2 * u(rng));
    std::vector<double> dist;
    for (Complex z : zeros) dist.push_back(std::abs(z - c));
    std::sort(dist.begin(), dist.end());
    double lo = dist.front() * 0.5, hi = dist.back() * 2.0;
    CHECK(radius_bisect(oracle, c, 1, lo, hi, 20) == doctest::Approx(dist[0]).epsilon(1e-4));
    CHECK(radius_bisect(oracle, c, 4, lo, hi, 20) == doctest::Approx(dist[3]).epsilon(1e-4));
  }
}
