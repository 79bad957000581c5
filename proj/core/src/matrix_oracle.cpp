#include <cmath>

#include "rootsum/oracle.hpp"

namespace rootsum {

namespace {

double inf_norm(const CMatrix& T) {
  double best = 0.0;
  for (int i = 0; i < T.n; ++i) {
    double row = 0.0;
    for (int j = 0; j < T.n; ++j) row += std::abs(T.at(i, j));
    best = std::max(best, row);
  }
  return best;
}

}  // namespace

NewtonOracle matrix_oracle(const CMatrix& T) {
  if (T.n < 1) throw DomainError("matrix oracle requires n >= 1");
  const int n = T.n;
  const double pivot_floor = 1e-13 * std::max(inf_norm(T), 1e-30);
  auto fn = [T, n, pivot_floor](Complex x) -> Complex {
    // A = xI - T, factored in place with partial pivoting.
    CMatrix A(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A.at(i, j) = (i == j ? x : Complex(0.0)) - T.at(i, j);
    std::vector<int> piv(static_cast<size_t>(n));
    for (int k = 0; k < n; ++k) {
      int best = k;
      for (int i = k + 1; i < n; ++i)
        if (std::abs(A.at(i, k)) > std::abs(A.at(best, k))) best = i;
      piv[static_cast<size_t>(k)] = best;
      if (best != k)
        for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(best, j));
      if (std::abs(A.at(k, k)) < pivot_floor)
        throw PoleError("xI - T is singular to working precision");
      for (int i = k + 1; i < n; ++i) {
        Complex m = A.at(i, k) / A.at(k, k);
        A.at(i, k) = m;
        for (int j = k + 1; j < n; ++j) A.at(i, j) -= m * A.at(k, j);
      }
    }
    // trace((xI - T)^{-1}) by solving against identity columns.
    Complex tr(0.0);
    std::vector<Complex> b(static_cast<size_t>(n));
    for (int col = 0; col < n; ++col) {
      for (int i = 0; i < n; ++i) b[static_cast<size_t>(i)] = (i == col) ? Complex(1.0) : Complex(0.0);
      for (int k = 0; k < n; ++k)
        if (piv[static_cast<size_t>(k)] != k)
          std::swap(b[static_cast<size_t>(k)], b[static_cast<size_t>(piv[static_cast<size_t>(k)])]);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) b[static_cast<size_t>(i)] -= A.at(i, j) * b[static_cast<size_t>(j)];
      for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) b[static_cast<size_t>(i)] -= A.at(i, j) * b[static_cast<size_t>(j)];
        b[static_cast<size_t>(i)] /= A.at(i, i);
      }
      tr += b[static_cast<size_t>(col)];
    }
    return tr;
  };
  return NewtonOracle(n, std::move(fn));
}

}  // namespace rootsum
