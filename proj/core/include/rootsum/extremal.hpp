#pragma once

#include <optional>

#include "rootsum/powersums.hpp"

namespace rootsum {

// Extremal-zero estimate from a ratio of consecutive power sums, together
// with the separation-driven error model.
struct ExtremalEstimate {
  enum class Side { smallest, largest };
  Complex value;
  Side side = Side::smallest;
  int k = 0;
  int m = 1;                          // assumed multiplicity of the extremal radius
  std::optional<double> delta;        // separation ratio bound, in [0, 1)
  std::optional<double> gamma;        // relative ratio error; absent when delta unknown
  std::optional<double> total_error;  // gamma-induced error + power-sum error
};

// Smallest zero from power sums of the reciprocals: x_d ~ sigma_k / sigma_{k+1}.
// The ratio direction is forced by dominance of x_d^{-k}.
ExtremalEstimate estimate_smallest(const PowerSumEstimate& sigma_k,
                                   const PowerSumEstimate& sigma_k1,
                                   std::optional<double> delta = std::nullopt, int m = 1);

// Largest zero: x_1 ~ s_{k+1} / s_k.
ExtremalEstimate estimate_largest(const PowerSumEstimate& s_k,
                                  const PowerSumEstimate& s_k1,
                                  std::optional<double> delta = std::nullopt, int m = 1);

// 2*delta^k / (1 - delta^k); +infinity when delta^k >= 1/2 fails badly enough
// that the bound is unusable (delta^k >= 1).
double gamma_bound(double delta, int k);

// Smallest k with gamma_bound(delta, k) <= 2^{-b}; the analytic value
// ceil((b+2)*log(2)/log(1/delta)) verified and bumped if needed.
int choose_k(double delta, int b);

// Additive certified error: ratio error + power-sum error.
double total_error(double gamma_err, double powersum_err);

}  // namespace rootsum
