#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rootsum/oracle.hpp"

namespace rootsum {

struct SolverConfig {
  int eps_bits = 20;       // target accuracy eps = 2^{-eps_bits}
  int b0 = 24;             // power-sum tolerance bits
  int q_cap = 1 << 20;     // max Cauchy nodes per sum
  int sample_q = 0;        // circle samples for the search stage; 0 -> max(32, 4d)
  int max_rounds = 64;     // search recursion depth
  bool refine = true;      // final Newton polish
  double rotation = 0.0;   // node phase offset threaded through Cauchy sums
};

struct RootApproximation {
  enum class Pipeline { lehmer_newton, extremal_small, extremal_large, descend_dlg };
  Complex z;
  double residual = 0.0;  // d/|R(z)|: certified radius of a disc holding a zero
  std::optional<double> error_bound;
  Pipeline pipeline = Pipeline::lehmer_newton;
  long long eval_count = 0;
  bool converged = true;
  bool stalled = false;  // refinement step size stopped decreasing
  std::string note;      // failure detail for partial results
};

// Newton's iteration z <- z - 1/R(z) from z0; stops at step size <= tol or
// maxit. A stall (no step decrease for 5 consecutive iterations) returns the
// best iterate with the stalled flag set rather than failing.
RootApproximation newton_refine(const NewtonOracle& oracle, Complex z0, double tol,
                                int maxit);

// Global search for some zero: alternates a nearest-zero radius estimate at
// the current center with ratio sampling on that circle, recentering on the
// best sample until d/|R(z)| <= eps.
RootApproximation lehmer_newton(const NewtonOracle& oracle, const SolverConfig& config);

// Absolutely smallest zero via power sums of the reciprocal zeros.
RootApproximation smallest_root(const NewtonOracle& oracle, const SolverConfig& config);

// Absolutely largest zero via power sums of the zeros themselves.
RootApproximation largest_root(const NewtonOracle& oracle, const SolverConfig& config);

struct RootSequenceResult {
  std::vector<RootApproximation> roots;  // ordered by discovery
  std::optional<int> failed_index;       // step that raised, when short
  std::string error;                     // its message
};

// n smallest zeros by repeated smallest_root + implicit deflation.
RootSequenceResult root_sequence(const NewtonOracle& oracle, int n,
                                 const SolverConfig& config);

// Zero nearest each center, independently (and concurrently) per center;
// output order follows the input order. Per-center failures are recorded in
// the note field, not thrown.
std::vector<RootApproximation> roots_near(const NewtonOracle& oracle,
                                          const std::vector<Complex>& centers,
                                          const SolverConfig& config);

namespace detail {
// Cache-adjustment seam for root_sequence: removes one known zero's
// contribution y^h/(1 - y^q) from cached node sums (y = scaled zero).
void subtract_root_power_sums(std::vector<Complex>& sums, int first_h, Complex y, int q);
}  // namespace detail

}  // namespace rootsum
