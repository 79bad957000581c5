#include "rootsum/solver.hpp"

#include <cmath>
#include <limits>

#include "rootsum/extremal.hpp"
#include "rootsum/powersums.hpp"
#include "rootsum/radii.hpp"
#include "rootsum/threads.hpp"

namespace rootsum {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double residual_at(const NewtonOracle& oracle, Complex z) {
  try {
    Complex r = oracle.evaluate(z);
    double mag = std::abs(r);
    return mag == 0.0 ? kInf : oracle.degree() / mag;
  } catch (const PoleError&) {
    return 0.0;
  }
}

// Disc root count with a small retry ladder (doubled q, rotated nodes) for
// low-confidence results or a node landing on a zero.
int probe_count(const NewtonOracle& oracle, Complex c, double r) {
  int q = choose_q(oracle.degree(), 1.2, 0, 3, r);
  double rotation = 0.0;
  RootCount last{};
  for (int attempt = 0; attempt < 4; ++attempt) {
    try {
      last = root_count(oracle, Disc(c, r), q, rotation);
      if (!last.low_confidence) return last.count;
    } catch (const PoleError&) {
    }
    q *= 2;
    rotation += 0.6180339887498949;
  }
  return last.count;
}

// Smallest radius (by doubling from `start`) whose disc holds >= j zeros.
double grow_to_count(const NewtonOracle& oracle, int j, double start) {
  double r = start;
  for (int i = 0; i < 120; ++i) {
    if (probe_count(oracle, Complex(0.0), r) >= j) return r;
    r *= 2.0;
  }
  throw BracketError("no disc radius reaches the requested zero count");
}

double shrink_below_count(const NewtonOracle& oracle, int j, double start) {
  double r = start;
  for (int i = 0; i < 120; ++i) {
    if (probe_count(oracle, Complex(0.0), r) < j) return r;
    r *= 0.5;
  }
  // zeros down at/near the origin keep the count >= j arbitrarily deep; the
  // final tiny radius is itself a valid upper bound for the j-th radius
  return r;
}

// j-th smallest zero modulus of `oracle`, within relative 2^{-tol_bits}.
double nth_radius(const NewtonOracle& oracle, int j, int tol_bits, double hint) {
  double hi = grow_to_count(oracle, j, hint);
  double lo = shrink_below_count(oracle, j, hi * 0.75);
  if (probe_count(oracle, Complex(0.0), lo) >= j) return lo;  // shrink capped out
  return radius_bisect(oracle, Complex(0.0), j, lo, hi, tol_bits);
}

struct SumCache {
  bool valid = false;
  double rho_disc = 0.0;  // disc radius the sums were computed on
  int k = 0;              // sums stored for h = k and h = k+1
  int q = 0;
  double theta = 0.0;
  double rotation = 0.0;
  int b_int = 0;  // accuracy the stored (k, q, theta) were certified for
  Complex s_k, s_k1;
  double bound_k = 0.0, bound_k1 = 0.0;
};

enum class Side { smallest, largest };

// Shared extremal pipeline. Works in a rescaled variable u = w/rho_disc where
// w are the zeros of `work` (the reciprocal zeros for Side::smallest), so that
// the dominant |u| sits at 1/theta and the node-sum error bound applies.
RootApproximation extremal_root(const NewtonOracle& base, const SolverConfig& config,
                                Side side, SumCache* cache) {
  const int d = base.degree();
  const long long evals0 = base.eval_count();
  const double eps = std::ldexp(1.0, -config.eps_bits);

  RootApproximation out;
  out.pipeline = side == Side::smallest ? RootApproximation::Pipeline::extremal_small
                                        : RootApproximation::Pipeline::extremal_large;

  auto finish = [&](Complex z) {
    if (config.refine) {
      RootApproximation nr = newton_refine(base, z, 0.25 * eps * std::max(1.0, std::abs(z)), 50);
      // accept the polish only if it stayed on the same root
      if (std::abs(nr.z - z) <= 0.1 * std::max(1.0, std::abs(z))) z = nr.z;
    }
    out.z = z;
    out.residual = residual_at(base, z);
    out.error_bound = eps + std::ldexp(1.0, -config.b0);
    out.eval_count = base.eval_count() - evals0;
    return out;
  };

  if (side == Side::smallest) {
    try {
      base.evaluate(Complex(0.0));
    } catch (const PoleError&) {
      return finish(Complex(0.0));  // origin is itself a zero
    }
  }

  if (d == 1) {
    // R(x) = 1/(x - r): one evaluation inverts to the root exactly
    Complex r0 = base.evaluate(Complex(0.0));
    return finish(-Complex(1.0) / r0);
  }

  NewtonOracle work = side == Side::smallest ? reversed_oracle(base) : base;

  // moduli of the largest and second-largest zeros of `work`
  constexpr int kTolBits = 10;
  const double tol = std::ldexp(1.0, -kTolBits);
  double hint = 1.0;
  if (work.coeff_backing()) {
    auto b = coeff_radii_bounds(*work.coeff_backing());
    if (b.second.upper > 0.0 && std::isfinite(b.second.upper)) hint = b.second.upper;
  }
  double rho_d = nth_radius(work, d, kTolBits, hint);
  double rho_d1 = nth_radius(work, d - 1, 6, rho_d);

  double delta = std::min(rho_d1 / (rho_d * (1.0 - 4.0 * tol)), 0.9999);
  if (delta >= 0.95)
    throw SeparationError("extremal zero modulus is not isolated; recenter and retry");

  const double target_mag = side == Side::smallest ? 1.0 / (rho_d * (1.0 - tol)) : rho_d;
  const int guard = std::max(0, static_cast<int>(std::ceil(std::log2(std::max(target_mag, 1.0)))));
  const int b_int = config.eps_bits + 2 + guard;
  int k = choose_k(delta, b_int);

  // Adjusted node sums from a previous sweep give a cheap starting guess; it
  // is only accepted when a Newton polish lands inside the certified modulus
  // window at the target residual, since the cached sums' absolute noise
  // floor may dominate the (much smaller) new extremal term.
  if (cache && cache->valid && cache->rotation == 0.0 && config.rotation == 0.0 &&
      gamma_bound(delta, cache->k) <= 0.25 &&
      rho_d <= cache->rho_disc / cache->theta * (1.0 + tol) &&
      cache->s_k != Complex(0.0)) {
    Complex u_guess = cache->s_k1 / cache->s_k;
    Complex w_guess = cache->rho_disc * u_guess;
    if (is_finite(w_guess) && w_guess != Complex(0.0)) {
      Complex z_guess = side == Side::smallest ? Complex(1.0) / w_guess : w_guess;
      if (is_finite(z_guess)) {
        RootApproximation nr =
            newton_refine(base, z_guess, 0.25 * eps * std::max(1.0, std::abs(z_guess)), 50);
        double zmag = std::abs(nr.z);
        double work_mag = side == Side::smallest ? (zmag > 0.0 ? 1.0 / zmag : kInf) : zmag;
        bool in_window = std::abs(work_mag - rho_d) <= 8.0 * tol * rho_d;
        if (in_window && nr.residual <= eps + std::ldexp(1.0, -config.b0)) {
          out.z = nr.z;
          out.residual = nr.residual;
          out.error_bound = eps + std::ldexp(1.0, -config.b0);
          out.eval_count = base.eval_count() - evals0;
          return out;
        }
      }
    }
  }

  Complex u_est;
  double rho_disc;
  {
    CauchyParams params;
    if (delta <= 0.5) {
      params.theta = 2.0;
      params.eps0_bits = config.b0 + k + 5 + guard;
      params.q = choose_q(d, params.theta, k + 1, params.eps0_bits, 1.0);
    } else {
      params = scaled_params(k + 1, d, config.b0 + 6 + guard);
    }
    params.rotation = config.rotation;
    if (params.q > config.q_cap)
      throw CapError("required node count exceeds q_cap; loosen b0 or recenter");

    rho_disc = params.theta * rho_d;
    Disc disc(Complex(0.0), rho_disc);
    PowerSumEstimate sk = cauchy_sum_disc(work, disc, k, params);
    PowerSumEstimate sk1 = cauchy_sum_disc(work, disc, k + 1, params);
    u_est = estimate_largest(sk, sk1, delta, 1).value;
    if (cache) {
      cache->valid = true;
      cache->rho_disc = rho_disc;
      cache->k = k;
      cache->q = params.q;
      cache->theta = params.theta;
      cache->rotation = params.rotation;
      cache->b_int = b_int;
      cache->s_k = sk.value;
      cache->s_k1 = sk1.value;
      cache->bound_k = sk.bound.value_or(0.0);
      cache->bound_k1 = sk1.bound.value_or(0.0);
    }
  }

  Complex w_est = rho_disc * u_est;
  if (w_est == Complex(0.0)) throw DivByZeroError("extremal power-sum ratio vanished");
  Complex z = side == Side::smallest ? Complex(1.0) / w_est : w_est;
  if (!is_finite(z)) throw RangeError("extremal estimate overflow");
  return finish(z);
}

}  // namespace

RootApproximation newton_refine(const NewtonOracle& oracle, Complex z0, double tol,
                                int maxit) {
  const int d = oracle.degree();
  RootApproximation out;
  out.pipeline = RootApproximation::Pipeline::lehmer_newton;
  const long long evals0 = oracle.eval_count();

  Complex z = z0;
  Complex best = z0;
  double best_step = kInf;
  int no_improve = 0;
  bool converged = false;
  for (int it = 0; it < maxit; ++it) {
    Complex r;
    try {
      r = oracle.evaluate(z);
    } catch (const PoleError&) {
      out.z = z;
      out.residual = 0.0;
      out.converged = true;
      out.eval_count = oracle.eval_count() - evals0;
      return out;
    }
    if (r == Complex(0.0))
      throw DivByZeroError("newton step undefined: R(z) = 0 (critical point)");
    Complex step = Complex(1.0) / r;
    z -= step;
    double st = std::abs(step);
    if (st < best_step) {
      best_step = st;
      best = z;
      no_improve = 0;
    } else if (++no_improve >= 5) {
      out.stalled = true;
      z = best;
      break;
    }
    if (st <= tol) {
      converged = true;
      break;
    }
  }
  out.z = z;
  out.converged = converged;
  out.residual = residual_at(oracle, z);
  out.eval_count = oracle.eval_count() - evals0;
  (void)d;
  return out;
}

RootApproximation lehmer_newton(const NewtonOracle& oracle, const SolverConfig& config) {
  const int d = oracle.degree();
  const double eps = std::ldexp(1.0, -config.eps_bits);
  const long long evals0 = oracle.eval_count();
  int q = config.sample_q > 0 ? config.sample_q : std::max(32, 4 * d);

  RootApproximation out;
  out.pipeline = RootApproximation::Pipeline::lehmer_newton;
  auto pack = [&](Complex z, double res, bool conv) {
    out.z = z;
    out.residual = res;
    out.error_bound = res;  // d/|R(z)| bounds the distance to the nearest zero
    out.converged = conv;
    out.eval_count = oracle.eval_count() - evals0;
    return out;
  };

  Complex c(0.0);
  Complex best_z(0.0);
  double best_res = kInf;
  double prev_res = kInf;
  double radius_guess = 1.0;
  bool doubled = false;

  for (int round = 0; round < config.max_rounds; ++round) {
    Complex rc;
    try {
      rc = oracle.evaluate(c);
    } catch (const PoleError&) {
      return pack(c, 0.0, true);
    }
    double rmag = std::abs(rc);
    if (rmag == 0.0) {
      // critical point: deterministic sidestep, then retry the round
      c += 0.37 * radius_guess * std::polar(1.0, 0.7 * (round + 1));
      continue;
    }
    double r1 = d / rmag;
    if (r1 <= eps) return pack(c, r1, true);
    radius_guess = r1;
    if (r1 < best_res) {
      best_res = r1;
      best_z = c;
    }

    // refine the nearest-zero radius before sampling the circle
    double rho = r1;
    try {
      double lo = r1 * 0.5;
      bool have_lo = false;
      for (int i = 0; i < 60; ++i) {
        if (probe_count(oracle, c, lo) == 0) {
          have_lo = true;
          break;
        }
        lo *= 0.5;
      }
      if (have_lo) rho = radius_bisect(oracle, c, 1, lo, r1 * 1.0000001, 6);
    } catch (const Error&) {
      rho = r1;  // sampling at the coarse radius still works
    }

    // sample the ratio on the circle; recenter on the best step
    Complex best_node = c;
    double best_step = kInf;
    try {
      for (int g = 0; g < q; ++g) {
        Complex node = c + rho * unity_root(q, g);
        Complex rn = oracle.evaluate(node);
        double stepmag = std::abs(rn) == 0.0 ? kInf : 1.0 / std::abs(rn);
        if (stepmag < best_step) {
          best_step = stepmag;
          best_node = node;
        }
      }
    } catch (const PoleError&) {
      // a sample landed exactly on a zero — cannot do better
      // (the offending node is unknown here; re-scan to find it)
      for (int g = 0; g < q; ++g) {
        Complex node = c + rho * unity_root(q, g);
        try {
          oracle.evaluate(node);
        } catch (const PoleError&) {
          return pack(node, 0.0, true);
        }
      }
    }

    Complex cand = best_node;
    if (config.refine) {
      RootApproximation nr = newton_refine(oracle, cand, 0.5 * eps, 30);
      cand = nr.z;
      if (nr.residual == 0.0) return pack(cand, 0.0, true);
    }
    double res = residual_at(oracle, cand);
    if (res <= eps) return pack(cand, res, true);
    if (res < best_res) {
      best_res = res;
      best_z = cand;
    }
    if (res >= prev_res && !doubled) {
      doubled = true;
      q *= 2;
    }
    prev_res = res;
    c = cand;
  }
  RootApproximation r = pack(best_z, best_res, false);
  r.note = "did not reach the target residual within max_rounds";
  return r;
}

RootApproximation smallest_root(const NewtonOracle& oracle, const SolverConfig& config) {
  return extremal_root(oracle, config, Side::smallest, nullptr);
}

RootApproximation largest_root(const NewtonOracle& oracle, const SolverConfig& config) {
  return extremal_root(oracle, config, Side::largest, nullptr);
}

namespace detail {

void subtract_root_power_sums(std::vector<Complex>& sums, int first_h, Complex y, int q) {
  Complex yq = std::pow(y, q);
  Complex den = Complex(1.0) - yq;
  if (den == Complex(0.0)) throw DivByZeroError("deflated zero lies on a node modulus");
  for (size_t i = 0; i < sums.size(); ++i) {
    Complex yh = std::pow(y, first_h + static_cast<int>(i));
    sums[i] -= yh / den;
  }
}

}  // namespace detail

RootSequenceResult root_sequence(const NewtonOracle& oracle, int n,
                                 const SolverConfig& config) {
  if (n > oracle.degree()) throw DomainError("requested more zeros than the degree");
  RootSequenceResult result;
  std::vector<Complex> zeros;
  SumCache cache;
  for (int i = 0; i < n; ++i) {
    NewtonOracle cur = zeros.empty() ? oracle : deflated_oracle(oracle, zeros);
    RootApproximation ra;
    try {
      ra = extremal_root(cur, config, Side::smallest, &cache);
    } catch (const Error& e) {
      result.failed_index = i;
      result.error = e.what();
      break;
    }
    result.roots.push_back(ra);
    zeros.push_back(ra.z);
    // keep the cached node sums consistent with the deflated zero set: in the
    // reversed + rescaled variable the removed zero sits at (1/z)/rho_disc
    if (cache.valid) {
      if (ra.z == Complex(0.0) || cache.rotation != 0.0) {
        cache.valid = false;
      } else {
        Complex u = (Complex(1.0) / ra.z) / cache.rho_disc;
        std::vector<Complex> sums{cache.s_k, cache.s_k1};
        try {
          detail::subtract_root_power_sums(sums, cache.k, u, cache.q);
          cache.s_k = sums[0];
          cache.s_k1 = sums[1];
        } catch (const Error&) {
          cache.valid = false;
        }
      }
    }
  }
  return result;
}

std::vector<RootApproximation> roots_near(const NewtonOracle& oracle,
                                          const std::vector<Complex>& centers,
                                          const SolverConfig& config) {
  std::vector<RootApproximation> out(centers.size());
  parallel_for(static_cast<long>(centers.size()), [&](long i) {
    Complex c = centers[static_cast<size_t>(i)];
    // independent counter per center so each result's eval_count is its own
    std::optional<Poly> backing;
    if (oracle.coeff_backing()) {
      try {
        backing = shift_scale(*oracle.coeff_backing(), c, 1.0);
      } catch (const RangeError&) {
      }
    }
    NewtonOracle shifted(
        oracle.degree(), [&oracle, c](Complex y) { return oracle.evaluate(c + y); },
        std::move(backing));
    RootApproximation& ra = out[static_cast<size_t>(i)];
    try {
      ra = extremal_root(shifted, config, Side::smallest, nullptr);
      ra.z += c;  // map the shifted zero back
      ra.residual = residual_at(oracle, ra.z);
    } catch (const Error& e) {
      ra.converged = false;
      ra.note = e.what();
      ra.z = c;
      ra.residual = kInf;
      ra.error_bound.reset();
    }
  });
  return out;
}

}  // namespace rootsum
