#pragma once

#include <optional>
#include <vector>

#include "rootsum/oracle.hpp"
#include "rootsum/poly.hpp"

namespace rootsum {

// Parameters governing a Cauchy-sum evaluation on a circle of q nodes.
struct CauchyParams {
  int q = 1;
  double theta = 2.0;
  double rho = 1.0;
  double rotation = 0.0;  // phase offset of the unity nodes
  int eps0_bits = 10;     // target absolute error 2^{-eps0_bits}
};

struct PowerSumEstimate {
  enum class Source { newton_identities, cauchy_sum };
  int h = 0;
  Complex value;
  std::optional<double> bound;  // certified |estimate - true sum| when theta known
  std::optional<CauchyParams> params;
  Source source = Source::cauchy_sum;
};

// Power sums of the reciprocals of the zeros of p, from the trailing
// coefficients [p_0, ..., p_{k+1}] with p_0 = 1, via back substitution
// of the triangular Toeplitz system (Newton's identities). Returns
// s'_1 ... s'_{k+1}.
std::vector<PowerSumEstimate> newton_power_sums(const std::vector<Complex>& trailing, int k);

// (1/q) sum_g zeta^{(h+1)g} R(e^{i*rotation} zeta^g), zeta = e^{2*pi*i/q}.
// Estimates sum of x_j^h over zeros inside the unit disc.
Complex cauchy_sum(const NewtonOracle& oracle, int h, int q, double rotation = 0.0);

// Cauchy sum on an arbitrary disc: estimates the h-th power sum of the
// rescaled zeros (x_j - c)/rho over zeros inside D(c, rho).
PowerSumEstimate cauchy_sum_disc(const NewtonOracle& oracle, const Disc& disc, int h,
                                 const CauchyParams& params);

// d*theta^h / (theta^q - 1)
double cauchy_error_bound(int d, double theta, int h, int q);

// Smallest q with cauchy_error_bound(d*max(rho,1), theta, h, q) <= 2^{-b0}.
int choose_q(int d, double theta, int h, int b0, double rho = 1.0);

// Scaling remedy when isolation is thin: theta = 2^{1/h},
// q = ceil(h * log2(1 + d*2^{b0+1})). Caller rescales so the zeros of
// interest lie inside radius 1/theta.
CauchyParams scaled_params(int h, int d, int b0);

struct RootCount {
  int count = 0;
  bool low_confidence = false;  // |s_{0,q} - round| > 0.25
  double raw = 0.0;             // Re s_{0,q} before rounding
};

// Number of zeros inside the disc, from the h = 0 Cauchy sum.
RootCount root_count(const NewtonOracle& oracle, const Disc& disc, int q,
                     double rotation = 0.0);

}  // namespace rootsum
