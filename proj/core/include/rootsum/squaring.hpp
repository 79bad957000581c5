#pragma once

#include <optional>
#include <vector>

#include "rootsum/oracle.hpp"
#include "rootsum/poly.hpp"

namespace rootsum {

// State of the coefficient-level root-squaring iteration: after h steps the
// zeros of p are the 2^h-th powers of the original zeros. In FG mode a
// companion polynomial q is carried alongside, initialized to x*p'(x).
//
// log_scale_p / log_scale_q accumulate the natural log of the normalization
// factors divided out so far (zero when normalization is off).
struct SquaringState {
  int h = 0;
  Poly p;
  std::optional<Poly> q;
  double log_scale_p = 0.0;
  double log_scale_q = 0.0;
};

SquaringState init_dlg(const Poly& p);
SquaringState init_fg(const Poly& p);

// One root-squaring step via the even/odd split closed form
// p_{h+1}(x) = (-1)^d (e(x)^2 - x*o(x)^2). With normalize, the result is
// divided by its max-magnitude coefficient (factor logged in the state).
SquaringState dlg_step(const SquaringState& s, bool normalize = false);

// Advances both p (as dlg_step) and q via q_{h+1} = b*e - a*o, the closed
// form of the companion recurrence 2*sqrt(x)*q_{h+1}(x) =
// q_h(sqrt(x))*p_h(-sqrt(x)) - q_h(-sqrt(x))*p_h(sqrt(x)).
SquaringState fg_step(const SquaringState& s, bool normalize = false);

// q_h(0)/p_h'(0); converges to the absolutely smallest zero when its radius
// is strictly separated from the others.
Complex gemignani_estimate(const SquaringState& s);

// Coefficient ratios -p_1/p_0 and -p_{d-1}/p_d of p_h; exactly the power
// sums sum x_j^{-2^h} and sum x_j^{2^h} respectively.
struct ExtremalRatios {
  Complex small;  // sum of 2^h-th powers of the reciprocal zeros
  Complex large;  // sum of 2^h-th powers of the zeros
};
ExtremalRatios extremal_power_ratios(const SquaringState& s);

struct DescendResult {
  Complex value;
  // Both square-root candidates had residuals within 10% of each other at
  // some level; the tie-break (smaller |imag|, then nonnegative real part)
  // was applied.
  bool ambiguous;
};

// Walks a zero of p_h back to a zero of p_0 choosing, per level, the square
// root candidate with the smaller residual. levels = [p_0, ..., p_h].
DescendResult descend(const std::vector<Poly>& levels, Complex y, int h);

// Evaluates the log-derivative of the h-times-squared polynomial at x using
// only the base oracle, by the recurrence
// R_{h+1}(x) = (R_h(sqrt(x)) - R_h(-sqrt(x))) / (2*sqrt(x)).
// Costs 2^h oracle calls; h > 20 raises DepthError.
Complex ratio_squaring_eval(const NewtonOracle& oracle, Complex x, int h);

}  // namespace rootsum
