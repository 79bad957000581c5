#include "rootsum/radii.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "rootsum/powersums.hpp"
#include "rootsum/squaring.hpp"

namespace rootsum {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

std::pair<RadiusBounds, RadiusBounds> coeff_radii_bounds(const Poly& p) {
  const int d = p.degree();
  if (d < 1) throw DomainError("radius bounds require degree >= 1");
  const double pd = std::abs(p.leading());

  RadiusBounds small;
  small.target = RadiusBounds::Target::smallest;
  small.method = RadiusBounds::Method::coeff;
  if (p.at(0) == Complex(0.0)) {
    small.lower = small.upper = 0.0;  // x = 0 is a zero
  } else {
    const double p0 = std::abs(p.at(0));
    double rminus = kInf;
    for (int i = 1; i <= d; ++i) {
      double pi = std::abs(p.at(i));
      if (pi == 0.0) continue;
      rminus = std::min(rminus, std::pow(p0 / pi, 1.0 / i));
    }
    small.lower = 0.5 * rminus;
    small.upper = d * rminus;
  }

  RadiusBounds large;
  large.target = RadiusBounds::Target::largest;
  large.method = RadiusBounds::Method::coeff;
  double rplus = 0.0;
  for (int i = 1; i <= d; ++i) {
    double pi = std::abs(p.at(d - i));
    if (pi == 0.0) continue;
    rplus = std::max(rplus, std::pow(pi / pd, 1.0 / i));
  }
  large.lower = rplus / d;
  large.upper = 2.0 * rplus;
  return {small, large};
}

RadiusBounds newton_smallest_bound(const NewtonOracle& oracle, Complex c) {
  RadiusBounds b;
  b.target = RadiusBounds::Target::smallest;
  b.method = RadiusBounds::Method::newton_ratio;
  try {
    Complex r = oracle.evaluate(c);
    double mag = std::abs(r);
    b.upper = mag == 0.0 ? kInf : oracle.degree() / mag;
  } catch (const PoleError&) {
    b.upper = 0.0;  // the center is (numerically) a zero
  }
  b.lower = 0.0;
  return b;
}

std::pair<RadiusBounds, RadiusBounds> dlg_sharpened_bounds(const Poly& p, int k) {
  const int d = p.degree();
  if (d < 1) throw DomainError("radius bounds require degree >= 1");
  if (k < 0 || k > 12) throw DomainError("squaring depth must be in [0, 12]");

  // Build levels p_0..p_k with per-step normalization; deep levels may still
  // become unusable when the coefficient span exceeds double range, in which
  // case we keep the prefix that survived.
  std::vector<Poly> levels;
  levels.push_back(p);
  try {
    SquaringState s = init_dlg(p);
    for (int i = 0; i < k; ++i) {
      s = dlg_step(s, /*normalize=*/true);
      // once the top coefficients underflow the level no longer carries
      // full-degree information; keep the full-degree prefix only
      if (s.p.degree() != d) break;
      levels.push_back(s.p);
    }
  } catch (const RangeError&) {
  }

  // ratio magnitudes |p_1/p_0| (reciprocal-sum) and |p_{d-1}/p_d| (power-sum)
  // per level; usable when finite and nonzero.
  auto small_ratio = [&](const Poly& q) -> double {
    double den = std::abs(q.at(0));
    return den == 0.0 ? kInf : std::abs(q.at(1)) / den;
  };
  auto large_ratio = [&](const Poly& q) -> double {
    double den = std::abs(q.at(d));
    return den == 0.0 ? kInf : std::abs(q.at(d - 1)) / den;
  };
  auto usable = [](double r) { return std::isfinite(r) && r > 0.0; };

  int si = -1, li = -1;
  for (int i = static_cast<int>(levels.size()) - 1; i >= 0; --i) {
    if (si < 0 && usable(small_ratio(levels[static_cast<size_t>(i)]))) si = i;
    if (li < 0 && usable(large_ratio(levels[static_cast<size_t>(i)]))) li = i;
  }
  if (si < 0 || li < 0)
    throw DivByZeroError(
        "extremal coefficient ratio vanishes at every squaring level (equal-moduli zeros)");

  RadiusBounds small;
  small.target = RadiusBounds::Target::smallest;
  small.method = RadiusBounds::Method::dlg_sharpened;
  {
    const double inv = std::ldexp(1.0, -si);  // 2^{-si}
    // |x_d|^{2^si} <= d / |sum x_j^{-2^si}|
    small.upper = std::pow(d / small_ratio(levels[static_cast<size_t>(si)]), inv);
    // complement from the coefficient bound at the same level
    auto lvl = coeff_radii_bounds(levels[static_cast<size_t>(si)]);
    small.lower = std::pow(lvl.first.lower, inv);
  }

  RadiusBounds large;
  large.target = RadiusBounds::Target::largest;
  large.method = RadiusBounds::Method::dlg_sharpened;
  {
    const double inv = std::ldexp(1.0, -li);
    // |x_1|^{2^li} >= (1/d) |sum x_j^{2^li}|
    large.lower = std::pow(large_ratio(levels[static_cast<size_t>(li)]) / d, inv);
    auto lvl = coeff_radii_bounds(levels[static_cast<size_t>(li)]);
    large.upper = std::pow(lvl.second.upper, inv);
  }
  return {small, large};
}

namespace {

struct CountResult {
  int count = 0;
  bool stable = false;
};

// root_count with a bounded retry schedule: doubled q and a node rotation on
// each retry (handles both low confidence and a node landing on a zero).
CountResult stable_count(const NewtonOracle& oracle, const Disc& disc) {
  int q0 = choose_q(oracle.degree(), 1.2, 0, 3, disc.radius);
  int q = q0;
  double rotation = 0.0;
  RootCount last;
  for (int attempt = 0; attempt < 4; ++attempt) {
    try {
      last = root_count(oracle, disc, q, rotation);
      if (!last.low_confidence) return {last.count, true};
    } catch (const PoleError&) {
      last.low_confidence = true;
    }
    q *= 2;
    rotation += 0.6180339887498949;  // irrational phase avoids re-collision
  }
  return {last.count, false};
}

}  // namespace

double radius_bisect(const NewtonOracle& oracle, Complex c, int j, double lo, double hi,
                     int tol_bits) {
  if (!(lo > 0.0 && hi > lo)) throw DomainError("radius_bisect requires 0 < lo < hi");
  if (j < 1 || j > oracle.degree()) throw DomainError("radius_bisect order j out of range");

  auto bracket = [&](double l, double h, CountResult& cl, CountResult& ch) {
    cl = stable_count(oracle, Disc(c, l));
    ch = stable_count(oracle, Disc(c, h));
    return cl.stable && ch.stable;
  };
  CountResult clo, chi;
  bool stable = false;
  const double lo0 = lo, hi0 = hi;
  // a probe circle may graze a zero modulus; widen the bracket progressively
  for (double f : {1.0, 1.01, 1.03, 1.08}) {
    lo = lo0 / f;
    hi = hi0 * f;
    if (bracket(lo, hi, clo, chi)) {
      stable = true;
      break;
    }
  }
  if (!stable && !(clo.count < j && j <= chi.count))
    throw CountUnstableError("disc root count stays ambiguous near the probe radii");
  if (!(clo.count < j && j <= chi.count))
    throw BracketError("radius_bisect: [lo, hi] does not bracket the j-th radius");

  const double tol = std::ldexp(1.0, -tol_bits);
  while (hi / lo - 1.0 > tol) {
    double mid = std::sqrt(lo * hi);
    // mid-probe instability: accept the rounded count; the bracket invariant
    // self-corrects on later probes
    CountResult cm = stable_count(oracle, Disc(c, mid));
    if (cm.count >= j)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace rootsum
