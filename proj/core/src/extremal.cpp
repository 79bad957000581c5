#include "rootsum/extremal.hpp"

#include <cmath>
#include <limits>

namespace rootsum {

namespace {

ExtremalEstimate make_estimate(ExtremalEstimate::Side side, const PowerSumEstimate& num,
                               const PowerSumEstimate& den, int k,
                               std::optional<double> delta, int m) {
  if (den.value == Complex(0.0))
    throw DivByZeroError("power-sum ratio denominator vanishes (unseparated extremal moduli)");
  ExtremalEstimate e;
  e.side = side;
  e.value = num.value / den.value;
  if (!is_finite(e.value)) throw RangeError("power-sum ratio overflow");
  e.k = k;
  e.m = m;
  e.delta = delta;
  if (delta) {
    double g = gamma_bound(*delta, k);
    e.gamma = g;
    // Propagate both contributions: the ratio's relative error from gamma and
    // the absolute node-sum errors carried on the operands.
    double ps_err = 0.0;
    if (num.bound && den.bound) {
      double dmag = std::abs(den.value);
      ps_err = (*num.bound + std::abs(e.value) * *den.bound) / dmag;
    }
    e.total_error = total_error(g * std::abs(e.value), ps_err);
  }
  return e;
}

}  // namespace

ExtremalEstimate estimate_smallest(const PowerSumEstimate& sigma_k,
                                   const PowerSumEstimate& sigma_k1,
                                   std::optional<double> delta, int m) {
  if (sigma_k1.h != sigma_k.h + 1)
    throw DomainError("estimate_smallest needs consecutive power indices");
  return make_estimate(ExtremalEstimate::Side::smallest, sigma_k, sigma_k1, sigma_k.h,
                       delta, m);
}

ExtremalEstimate estimate_largest(const PowerSumEstimate& s_k, const PowerSumEstimate& s_k1,
                                  std::optional<double> delta, int m) {
  if (s_k1.h != s_k.h + 1)
    throw DomainError("estimate_largest needs consecutive power indices");
  return make_estimate(ExtremalEstimate::Side::largest, s_k1, s_k, s_k.h, delta, m);
}

double gamma_bound(double delta, int k) {
  if (!(delta >= 0.0 && delta < 1.0)) throw DomainError("gamma_bound requires delta in [0,1)");
  double dk = std::pow(delta, k);
  if (dk >= 1.0) return std::numeric_limits<double>::infinity();
  return 2.0 * dk / (1.0 - dk);
}

int choose_k(double delta, int b) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("choose_k requires delta in (0,1)");
  double eps = std::ldexp(1.0, -b);
  int k = static_cast<int>(std::ceil((b + 2) * std::log(2.0) / std::log(1.0 / delta)));
  k = std::max(k, 1);
  while (!(gamma_bound(delta, k) <= eps)) ++k;
  return k;
}

double total_error(double gamma_err, double powersum_err) {
  if (gamma_err < 0.0 || powersum_err < 0.0)
    throw DomainError("error contributions must be nonnegative");
  return gamma_err + powersum_err;
}

}  // namespace rootsum
