#pragma once

#include <complex>
#include <vector>

#include "rootsum/errors.hpp"

namespace rootsum {

using Complex = std::complex<double>;

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// exp(2*pi*i*g/q), the g-th power of the primitive q-th root of unity.
Complex unity_root(int q, long g);

// Dense univariate polynomial over complex doubles, lowest degree first.
// Trailing zero coefficients are trimmed on construction so that the leading
// coefficient is nonzero; the zero polynomial is stored as the single
// coefficient 0.
class Poly {
public:
  Poly() : c_{Complex(0.0, 0.0)} {}
  explicit Poly(std::vector<Complex> coeffs);
  static Poly constant(Complex c) { return Poly({c}); }
  static Poly identity() { return Poly({Complex(0.0), Complex(1.0)}); }
  static Poly from_roots(const std::vector<Complex>& roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return c_; }
  // Coefficient of x^i; zero outside the stored range.
  Complex at(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[static_cast<size_t>(i)]
                                                       : Complex(0.0);
  }
  Complex leading() const { return c_.back(); }
  bool is_zero() const { return c_.size() == 1 && c_[0] == Complex(0.0); }

private:
  std::vector<Complex> c_;
};

struct Disc {
  Complex center;
  double radius;
  Disc(Complex c, double r) : center(c), radius(r) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw DomainError("disc radius must be positive and finite");
  }
};

// Horner evaluation, fixed descending-index order.
Complex eval(const Poly& p, Complex x);

Poly derivative(const Poly& p);

struct ReverseResult {
  Poly poly;
  // Set when p(0) = 0: the reversal dropped degree after normalization and
  // the zero/reciprocal correspondence does not cover the vanished roots.
  bool degree_dropped;
};
ReverseResult reverse(const Poly& p);

// t(y) = p(c + rho*y); zeros map by x = c + rho*y.
Poly shift_scale(const Poly& p, Complex c, double rho);

// p mod (x^q - 1): coefficient i folded into slot i mod q.
Poly mod_cyclotomic(const Poly& p, int q);

// [p(zeta_q^g)] for g = 0..q-1; radix-2 FFT when q is a power of two.
std::vector<Complex> eval_at_unity(const Poly& p, int q);

// Schoolbook product.
Poly mul(const Poly& a, const Poly& b);
Poly add(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Complex s);

}  // namespace rootsum
