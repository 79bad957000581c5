#pragma once

// Shared helpers for the test binaries: seeded random instances with known
// roots, and an independent companion-matrix eigenvalue root oracle (Eigen)
// for cross-checking against instances whose roots are not known a priori.

#include <algorithm>
#include <random>
#include <vector>

#include "rootsum/poly.hpp"

#ifdef HAVE_EIGEN
#include <Eigen/Eigenvalues>
#endif

namespace testsupport {

using rootsum::Complex;
using rootsum::Poly;

// Random roots with moduli log-uniform in [rmin, rmax], uniform phases.
inline std::vector<Complex> random_roots(int degree, unsigned long long seed,
                                         double rmin = 0.1, double rmax = 10.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ulog(std::log(rmin), std::log(rmax));
  std::uniform_real_distribution<double> uang(0.0, 6.283185307179586);
  std::vector<Complex> roots;
  roots.reserve(static_cast<size_t>(degree));
  for (int i = 0; i < degree; ++i)
    roots.push_back(std::polar(std::exp(ulog(rng)), uang(rng)));
  return roots;
}

inline double min_modulus(const std::vector<Complex>& roots) {
  double m = std::abs(roots[0]);
  for (Complex r : roots) m = std::min(m, std::abs(r));
  return m;
}

inline double max_modulus(const std::vector<Complex>& roots) {
  double m = std::abs(roots[0]);
  for (Complex r : roots) m = std::max(m, std::abs(r));
  return m;
}

// Greedy multiset match: largest distance between paired elements.
inline double multiset_distance(std::vector<Complex> a, std::vector<Complex> b) {
  double worst = 0.0;
  while (!a.empty() && !b.empty()) {
    size_t bi = 0;
    double best = 1e300;
    for (size_t j = 0; j < b.size(); ++j) {
      double d = std::abs(a.back() - b[j]);
      if (d < best) {
        best = d;
        bi = j;
      }
    }
    worst = std::max(worst, best);
    a.pop_back();
    b.erase(b.begin() + static_cast<long>(bi));
  }
  return worst;
}

#ifdef HAVE_EIGEN
// Independent root oracle: eigenvalues of the companion matrix, computed by
// Eigen's QR-based complex eigensolver. Used only for cross-checks.
inline std::vector<Complex> companion_roots(const Poly& p) {
  const int d = p.degree();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) m(i, d - 1) = -p.at(i) / p.leading();
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  std::vector<Complex> roots;
  roots.reserve(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) roots.push_back(solver.eigenvalues()(i));
  return roots;
}
#endif

}  // namespace testsupport
