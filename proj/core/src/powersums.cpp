#include "rootsum/powersums.hpp"

#include <cmath>
#include <numbers>

#include "rootsum/threads.hpp"

namespace rootsum {

std::vector<PowerSumEstimate> newton_power_sums(const std::vector<Complex>& trailing, int k) {
  if (k < 0) throw DomainError("newton_power_sums requires k >= 0");
  if (static_cast<int>(trailing.size()) < k + 2)
    throw DomainError("newton_power_sums needs coefficients p_0..p_{k+1}");
  if (std::abs(trailing[0] - Complex(1.0)) > 1e-12)
    throw NormalizationError("trailing coefficients must be normalized to p_0 = 1");

  // s_i = -i*c_i - sum_{j=1}^{i-1} c_j * s_{i-j}, back substitution in the
  // triangular Toeplitz system of Newton's identities.
  std::vector<Complex> s(static_cast<size_t>(k) + 2);
  std::vector<PowerSumEstimate> out;
  out.reserve(static_cast<size_t>(k) + 1);
  for (int i = 1; i <= k + 1; ++i) {
    Complex acc = -static_cast<double>(i) * trailing[static_cast<size_t>(i)];
    for (int j = 1; j < i; ++j)
      acc -= trailing[static_cast<size_t>(j)] * s[static_cast<size_t>(i - j)];
    s[static_cast<size_t>(i)] = acc;
    PowerSumEstimate e;
    e.h = i;
    e.value = acc;
    e.source = PowerSumEstimate::Source::newton_identities;
    out.push_back(e);
  }
  return out;
}

namespace {

// Evaluation at the q rotated unity nodes x_g = e^{i*phi} zeta^g, then the
// weighted sum (1/q) sum_g x_g^{h+1} R(x_g), which reduces to the plain
// Cauchy sum at phi = 0 and estimates the same power sums otherwise (the
// rotated circle has the same isolation).
Complex cauchy_sum_impl(const NewtonOracle& oracle, int h, int q, double rotation) {
  if (!(h >= 0 && h < q)) throw DomainError("cauchy sum requires 0 <= h < q");

  std::vector<Complex> ratio(static_cast<size_t>(q));
  const Complex phase = std::polar(1.0, rotation);
  const bool fast = rotation == 0.0 && oracle.coeff_backing() &&
                    q < oracle.coeff_backing()->degree();
  if (fast) {
    // Coefficient fast path: fold p and p' mod (x^q - 1), then evaluate the
    // folded images at the unity nodes in O(d + q log q) total.
    const Poly& p = *oracle.coeff_backing();
    std::vector<Complex> pv = eval_at_unity(mod_cyclotomic(p, q), q);
    std::vector<Complex> dv = eval_at_unity(mod_cyclotomic(derivative(p), q), q);
    for (int g = 0; g < q; ++g) {
      Complex den = pv[static_cast<size_t>(g)];
      if (std::abs(den) < 1e-300)
        throw PoleError("cauchy sum node coincides with a zero");
      ratio[static_cast<size_t>(g)] = dv[static_cast<size_t>(g)] / den;
      if (!is_finite(ratio[static_cast<size_t>(g)]))
        throw PoleError("newton ratio is not finite at a cauchy node");
    }
    oracle.add_evals(q);
  } else {
    parallel_for(q, [&](long g) {
      Complex node = phase * unity_root(q, g);
      ratio[static_cast<size_t>(g)] = oracle.evaluate(node);
    });
  }

  // Fixed ascending-g reduction for reproducibility.
  Complex acc(0.0);
  for (int g = 0; g < q; ++g) {
    Complex node = phase * unity_root(q, g);
    Complex w = std::pow(node, h + 1);
    acc += w * ratio[static_cast<size_t>(g)];
  }
  return acc / static_cast<double>(q);
}

}  // namespace

Complex cauchy_sum(const NewtonOracle& oracle, int h, int q, double rotation) {
  return cauchy_sum_impl(oracle, h, q, rotation);
}

PowerSumEstimate cauchy_sum_disc(const NewtonOracle& oracle, const Disc& disc, int h,
                                 const CauchyParams& params) {
  const bool identity = disc.center == Complex(0.0) && disc.radius == 1.0;
  Complex v;
  if (identity) {
    v = cauchy_sum_impl(oracle, h, params.q, params.rotation);
  } else {
    NewtonOracle shifted = shifted_oracle(oracle, disc.center, disc.radius);
    v = cauchy_sum_impl(shifted, h, params.q, params.rotation);
  }
  PowerSumEstimate e;
  e.h = h;
  e.value = v;
  e.bound = cauchy_error_bound(oracle.degree(), params.theta, h, params.q);
  CauchyParams stored = params;
  stored.rho = disc.radius;
  e.params = stored;
  e.source = PowerSumEstimate::Source::cauchy_sum;
  return e;
}

double cauchy_error_bound(int d, double theta, int h, int q) {
  if (!(theta > 1.0)) throw DomainError("error bound requires theta > 1");
  if (!(h >= 0 && h < q)) throw DomainError("error bound requires 0 <= h < q");
  return d * std::pow(theta, h) / (std::pow(theta, q) - 1.0);
}

int choose_q(int d, double theta, int h, int b0, double rho) {
  if (!(theta > 1.0)) throw DomainError("choose_q requires theta > 1");
  const double deff = d * std::max(rho, 1.0);
  const double eps0 = std::ldexp(1.0, -b0);
  constexpr long kCap = 1L << 24;

  // theta^q >= 1 + deff*theta^h/eps0; start at the analytic value, then
  // bump/trim so the returned q is exactly the first satisfying one.
  double rhs = 1.0 + deff * std::pow(theta, h) / eps0;
  long q = std::lround(std::ceil(std::log(rhs) / std::log(theta)));
  q = std::max<long>(q, h + 1);
  auto ok = [&](long qq) {
    return deff * std::pow(theta, h) / (std::pow(theta, static_cast<double>(qq)) - 1.0) <= eps0;
  };
  while (q <= kCap && !ok(q)) ++q;
  while (q - 1 > h && ok(q - 1)) --q;
  if (q > kCap)
    throw CapError("cauchy node count would exceed 2^24; rescale the variable first");
  return static_cast<int>(q);
}

CauchyParams scaled_params(int h, int d, int b0) {
  if (h < 1) throw DomainError("scaled_params requires h >= 1");
  CauchyParams p;
  p.theta = std::pow(2.0, 1.0 / h);
  p.q = static_cast<int>(std::ceil(
      h * std::log2(1.0 + d * std::ldexp(1.0, b0 + 1))));
  p.eps0_bits = b0;
  return p;
}

RootCount root_count(const NewtonOracle& oracle, const Disc& disc, int q, double rotation) {
  CauchyParams params;
  params.q = q;
  params.theta = 1.2;
  params.rotation = rotation;
  PowerSumEstimate e = cauchy_sum_disc(oracle, disc, 0, params);
  RootCount rc;
  rc.raw = e.value.real();
  rc.count = static_cast<int>(std::lround(rc.raw));
  rc.low_confidence = std::abs(e.value - Complex(static_cast<double>(rc.count))) > 0.25;
  return rc;
}

}  // namespace rootsum
