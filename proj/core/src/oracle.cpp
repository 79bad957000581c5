#include "rootsum/oracle.hpp"

#include <cmath>

namespace rootsum {

namespace {
constexpr double kPoleFloor = 1e-300;
}

NewtonOracle oracle_from_coeffs(const Poly& p) {
  if (p.degree() < 1) throw DomainError("oracle_from_coeffs requires degree >= 1");
  Poly dp = derivative(p);
  auto fn = [p, dp](Complex x) -> Complex {
    Complex pv = eval(p, x);
    if (std::abs(pv) < kPoleFloor) throw PoleError("evaluation at a zero of p");
    return eval(dp, x) / pv;
  };
  return NewtonOracle(p.degree(), std::move(fn), p);
}

NewtonOracle oracle_from_slp(const StraightLineProgram& prog, int degree) {
  auto fn = [prog](Complex x) -> Complex {
    DualValue f = prog.run(x);
    if (std::abs(f.value) < kPoleFloor) throw PoleError("program value vanishes at the query point");
    return f.deriv / f.value;
  };
  return NewtonOracle(degree, std::move(fn));
}

NewtonOracle deflated_oracle(const NewtonOracle& base, const std::vector<Complex>& zeros) {
  int d = base.degree() - static_cast<int>(zeros.size());
  if (d < 1) throw DomainError("deflation would drop the degree below 1");
  auto fn = [base, zeros](Complex x) -> Complex {
    Complex r = base.evaluate(x);
    for (Complex z : zeros) {
      Complex dx = x - z;
      if (std::abs(dx) < kPoleFloor) throw PoleError("query point equals a deflated zero");
      r -= Complex(1.0) / dx;
    }
    return r;
  };
  return NewtonOracle::wrapping(base, d, std::move(fn));
}

NewtonOracle reversed_oracle(const NewtonOracle& base) {
  int d = base.degree();
  auto fn = [base, d](Complex x) -> Complex {
    if (std::abs(x) < kPoleFloor) throw PoleError("reversed oracle pole at x = 0");
    Complex inv = Complex(1.0) / x;
    return static_cast<double>(d) * inv - base.evaluate(inv) * inv * inv;
  };
  std::optional<Poly> backing;
  if (base.coeff_backing()) {
    ReverseResult rr = reverse(*base.coeff_backing());
    if (!rr.degree_dropped) backing = rr.poly;
  }
  return NewtonOracle::wrapping(base, d, std::move(fn), std::move(backing));
}

NewtonOracle shifted_oracle(const NewtonOracle& base, Complex c, double rho) {
  if (!(rho > 0.0)) throw DomainError("shifted_oracle requires rho > 0");
  auto fn = [base, c, rho](Complex y) -> Complex { return rho * base.evaluate(c + rho * y); };
  std::optional<Poly> backing;
  if (base.coeff_backing()) {
    try {
      backing = shift_scale(*base.coeff_backing(), c, rho);
    } catch (const RangeError&) {
      // keep the oracle usable; only the fast path is lost
    }
  }
  return NewtonOracle::wrapping(base, base.degree(), std::move(fn), std::move(backing));
}

}  // namespace rootsum
