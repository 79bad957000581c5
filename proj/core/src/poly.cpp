#include "rootsum/poly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace rootsum {

Complex unity_root(int q, long g) {
  double angle = 2.0 * std::numbers::pi * static_cast<double>(g) / static_cast<double>(q);
  return std::polar(1.0, angle);
}

Poly::Poly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.push_back(Complex(0.0));
  while (c_.size() > 1 && c_.back() == Complex(0.0)) c_.pop_back();
}

Poly Poly::from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{Complex(1.0)};
  for (Complex r : roots) {
    // multiply by (x - r)
    std::vector<Complex> next(c.size() + 1, Complex(0.0));
    for (size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return Poly(std::move(c));
}

Complex eval(const Poly& p, Complex x) {
  const auto& c = p.coeffs();
  Complex acc = c.back();
  for (size_t i = c.size() - 1; i-- > 0;) acc = acc * x + c[i];
  if (!is_finite(acc)) throw RangeError("polynomial evaluation overflowed");
  return acc;
}

Poly derivative(const Poly& p) {
  if (p.degree() == 0) return Poly();
  std::vector<Complex> d(static_cast<size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i)
    d[static_cast<size_t>(i - 1)] = static_cast<double>(i) * p.at(i);
  return Poly(std::move(d));
}

ReverseResult reverse(const Poly& p) {
  std::vector<Complex> c(p.coeffs().rbegin(), p.coeffs().rend());
  bool dropped = p.at(0) == Complex(0.0) && p.degree() > 0;
  return ReverseResult{Poly(std::move(c)), dropped};
}

Poly shift_scale(const Poly& p, Complex c, double rho) {
  if (!(rho > 0.0)) throw DomainError("shift_scale requires rho > 0");
  // Repeated synthetic division extracts Taylor coefficients at c.
  std::vector<Complex> a = p.coeffs();
  const size_t n = a.size();
  for (size_t k = 0; k + 1 < n; ++k)
    for (size_t i = n - 1; i-- > k;) a[i] += c * a[i + 1];
  Complex pw(1.0);
  for (size_t i = 0; i < n; ++i) {
    a[i] *= pw;
    pw *= rho;
    if (!is_finite(a[i])) throw RangeError("shift_scale coefficient overflow");
  }
  return Poly(std::move(a));
}

Poly mod_cyclotomic(const Poly& p, int q) {
  if (q < 1) throw DomainError("mod_cyclotomic requires q >= 1");
  std::vector<Complex> r(static_cast<size_t>(q), Complex(0.0));
  for (int i = 0; i <= p.degree(); ++i) r[static_cast<size_t>(i % q)] += p.at(i);
  return Poly(std::move(r));
}

namespace {

bool is_pow2(int q) { return q > 0 && (q & (q - 1)) == 0; }

// In-place radix-2 FFT with twiddle sign +1: X[g] = sum_i x[i] zeta^{ig}.
void fft_pow2(std::vector<Complex>& a) {
  const size_t n = a.size();
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    Complex wlen = unity_root(static_cast<int>(len), 1);
    for (size_t i = 0; i < n; i += len) {
      Complex w(1.0);
      for (size_t k = 0; k < len / 2; ++k) {
        Complex u = a[i + k];
        Complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
}

}  // namespace

std::vector<Complex> eval_at_unity(const Poly& p, int q) {
  if (q < 1) throw DomainError("eval_at_unity requires q >= 1");
  if (is_pow2(q)) {
    std::vector<Complex> a = mod_cyclotomic(p, q).coeffs();
    a.resize(static_cast<size_t>(q), Complex(0.0));
    fft_pow2(a);
    return a;
  }
  std::vector<Complex> out(static_cast<size_t>(q));
  for (int g = 0; g < q; ++g) out[static_cast<size_t>(g)] = eval(p, unity_root(q, g));
  return out;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Complex> c(static_cast<size_t>(a.degree() + b.degree()) + 1, Complex(0.0));
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j)
      c[static_cast<size_t>(i + j)] += a.at(i) * b.at(j);
  return Poly(std::move(c));
}

Poly add(const Poly& a, const Poly& b) {
  std::vector<Complex> c(static_cast<size_t>(std::max(a.degree(), b.degree())) + 1);
  for (int i = 0; i < static_cast<int>(c.size()); ++i) c[static_cast<size_t>(i)] = a.at(i) + b.at(i);
  return Poly(std::move(c));
}

Poly scale(const Poly& a, Complex s) {
  std::vector<Complex> c = a.coeffs();
  for (auto& v : c) v *= s;
  return Poly(std::move(c));
}

}  // namespace rootsum
