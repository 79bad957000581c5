#pragma once

#include <atomic>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "rootsum/poly.hpp"

namespace rootsum {

// Black-box evaluator for the logarithmic derivative R(x) = p'(x)/p(x) of a
// degree-d polynomial. Sign convention throughout the library: evaluate()
// returns +p'(x)/p(x) = sum_j 1/(x - x_j); the negated ratio is applied at
// the consumer sites that need it.
//
// evaluate() at a zero of p raises PoleError instead of returning a
// non-finite value. Copies share the evaluation counter.
class NewtonOracle {
public:
  NewtonOracle(int degree, std::function<Complex(Complex)> fn,
               std::optional<Poly> coeff_backing = std::nullopt)
      : degree_(degree),
        fn_(std::move(fn)),
        poly_(std::move(coeff_backing)),
        count_(std::make_shared<std::atomic<long long>>(0)) {
    if (degree_ < 1) throw DomainError("oracle degree must be >= 1");
  }

  // Adapter over an existing oracle: shares base's evaluation counter. The
  // wrapped fn calls base.evaluate() itself, which already counts, so the
  // adapter does not count its own calls.
  static NewtonOracle wrapping(const NewtonOracle& base, int degree,
                               std::function<Complex(Complex)> fn,
                               std::optional<Poly> backing = std::nullopt) {
    NewtonOracle o(degree, std::move(fn), std::move(backing));
    o.count_ = base.count_;
    o.self_count_ = false;
    return o;
  }

  int degree() const { return degree_; }

  Complex evaluate(Complex x) const {
    if (self_count_) count_->fetch_add(1, std::memory_order_relaxed);
    Complex r = fn_(x);
    if (!is_finite(r)) throw PoleError("newton ratio is not finite at the query point");
    return r;
  }

  long long eval_count() const { return count_->load(std::memory_order_relaxed); }
  // Batched accounting used by the coefficient fast path, which computes q
  // ratio values without going through evaluate().
  void add_evals(long long n) const { count_->fetch_add(n, std::memory_order_relaxed); }

  // Present when the oracle is coefficient-backed; enables the
  // mod-(x^q - 1) + DFT fast path for Cauchy sums.
  const std::optional<Poly>& coeff_backing() const { return poly_; }

private:
  int degree_;
  std::function<Complex(Complex)> fn_;
  std::optional<Poly> poly_;
  std::shared_ptr<std::atomic<long long>> count_;
  bool self_count_ = true;
};

// Value/derivative pair propagated by the chain rule.
struct DualValue {
  Complex value;
  Complex deriv;

  friend DualValue operator+(DualValue a, DualValue b) {
    return {a.value + b.value, a.deriv + b.deriv};
  }
  friend DualValue operator-(DualValue a, DualValue b) {
    return {a.value - b.value, a.deriv - b.deriv};
  }
  friend DualValue operator*(DualValue a, DualValue b) {
    return {a.value * b.value, a.value * b.deriv + a.deriv * b.value};
  }
  friend DualValue operator/(DualValue a, DualValue b) {
    if (b.value == Complex(0.0)) throw DivByZeroError("dual division by zero");
    Complex v = a.value / b.value;
    return {v, (a.deriv - v * b.deriv) / b.value};
  }
  static DualValue input(Complex x) { return {x, Complex(1.0)}; }
  static DualValue constant(Complex c) { return {c, Complex(0.0)}; }
};

// Single-input, single-assignment straight-line program. Operand indices
// refer to earlier instructions; the last instruction is the program value.
struct SlpInstr {
  enum class Op { input, constant, add, sub, mul, div, smul };
  Op op;
  int a = -1;  // left operand index (or sole operand for smul)
  int b = -1;  // right operand index
  Complex k;   // scalar for constant/smul
};

class StraightLineProgram {
public:
  explicit StraightLineProgram(std::vector<SlpInstr> instrs);
  const std::vector<SlpInstr>& instructions() const { return instrs_; }
  DualValue run(Complex x) const;

private:
  std::vector<SlpInstr> instrs_;
};

// Square complex matrix, row-major.
struct CMatrix {
  int n = 0;
  std::vector<Complex> a;
  explicit CMatrix(int n_) : n(n_), a(static_cast<size_t>(n_) * static_cast<size_t>(n_)) {}
  Complex& at(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; }
  Complex at(int i, int j) const { return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; }
};

NewtonOracle oracle_from_coeffs(const Poly& p);
NewtonOracle oracle_from_slp(const StraightLineProgram& prog, int degree);
NewtonOracle deflated_oracle(const NewtonOracle& base, const std::vector<Complex>& zeros);
NewtonOracle reversed_oracle(const NewtonOracle& base);
// R_t(y) = rho * base(c + rho*y), the ratio-level Taylor shift with scaling.
NewtonOracle shifted_oracle(const NewtonOracle& base, Complex c, double rho);
// trace((xI - T)^{-1}) via dense partial-pivoted LU.
NewtonOracle matrix_oracle(const CMatrix& T);

}  // namespace rootsum
