#pragma once

#include <utility>

#include "rootsum/oracle.hpp"
#include "rootsum/poly.hpp"

namespace rootsum {

struct RadiusBounds {
  enum class Target { smallest, largest };
  enum class Method { coeff, newton_ratio, dlg_sharpened, cauchy_bisect };
  double lower = 0.0;
  double upper = 0.0;  // may be +infinity (newton_ratio at a critical point)
  Target target = Target::smallest;
  Method method = Method::coeff;
  bool unbounded() const { return !std::isfinite(upper); }
};

// Classical coefficient bounds. Returns {smallest, largest}:
//   (1/2) r- <= |x_d| <= d r-   with r- = min_{i>=1} |p_0/p_i|^{1/i}
//   (1/d) r+ <= |x_1| <  2 r+   with r+ = max_{i>=1} |p_{d-i}/p_d|^{1/i}
std::pair<RadiusBounds, RadiusBounds> coeff_radii_bounds(const Poly& p);

// Distance from c to the nearest zero is at most d/|R(c)|; infinite upper
// when R(c) = 0 (critical point), upper 0 when c is itself a zero.
RadiusBounds newton_smallest_bound(const NewtonOracle& oracle, Complex c);

// Bounds sharpened by k rounds of normalized root-squaring, taking real
// 2^k-th roots of the squared-zero bounds. Guarded at k <= 12. When deep
// levels overflow the ratio, falls back per side to the deepest level whose
// ratio is finite and nonzero (earlier levels stay valid; sharpening is
// monotone).
std::pair<RadiusBounds, RadiusBounds> dlg_sharpened_bounds(const Poly& p, int k);

// The j-th smallest distance from c to a zero, found by bisection on the
// log-radius using disc root counts. lo/hi must bracket: count(D(c,lo)) < j
// <= count(D(c,hi)).
double radius_bisect(const NewtonOracle& oracle, Complex c, int j, double lo, double hi,
                     int tol_bits);

}  // namespace rootsum
