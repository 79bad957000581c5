#include "rootsum/squaring.hpp"

#include <cmath>

namespace rootsum {

namespace {

// p(y) = e(y^2) + y*o(y^2)
void even_odd_split(const Poly& p, Poly& e, Poly& o) {
  std::vector<Complex> ec, oc;
  for (int i = 0; i <= p.degree(); ++i) {
    if (i % 2 == 0)
      ec.push_back(p.at(i));
    else
      oc.push_back(p.at(i));
  }
  e = Poly(std::move(ec));
  o = Poly(std::move(oc));
}

Poly shift_up(const Poly& p) {  // x * p(x)
  if (p.is_zero()) return Poly();
  std::vector<Complex> c(static_cast<size_t>(p.degree()) + 2, Complex(0.0));
  for (int i = 0; i <= p.degree(); ++i) c[static_cast<size_t>(i + 1)] = p.at(i);
  return Poly(std::move(c));
}

void check_coeffs(const Poly& p, int expect_degree) {
  for (const Complex& c : p.coeffs())
    if (!is_finite(c)) throw RangeError("root-squaring coefficient overflow");
  if (p.degree() != expect_degree)
    throw RangeError("root-squaring leading coefficient underflowed to zero");
}

double max_coeff_mag(const Poly& p) {
  double m = 0.0;
  for (const Complex& c : p.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

Poly square_zeros(const Poly& p) {
  Poly e, o;
  even_odd_split(p, e, o);
  Poly out = add(mul(e, e), scale(shift_up(mul(o, o)), Complex(-1.0)));
  if (p.degree() % 2 == 1) out = scale(out, Complex(-1.0));
  // The leading coefficient equals p_d^2 in exact arithmetic; pin it so
  // rounding in the cross terms cannot drift it.
  std::vector<Complex> c = out.coeffs();
  c.resize(static_cast<size_t>(p.degree()) + 1, Complex(0.0));
  c.back() = p.leading() * p.leading();
  return Poly(std::move(c));
}

}  // namespace

SquaringState init_dlg(const Poly& p) {
  if (p.degree() < 1) throw DomainError("root-squaring requires degree >= 1");
  return SquaringState{0, p, std::nullopt, 0.0, 0.0};
}

SquaringState init_fg(const Poly& p) {
  SquaringState s = init_dlg(p);
  s.q = shift_up(derivative(p));  // q_0(x) = x*p'(x)
  return s;
}

SquaringState dlg_step(const SquaringState& s, bool normalize) {
  Poly next = square_zeros(s.p);
  if (normalize) {
    // Graceful degradation: the relative magnitude of the top coefficients
    // genuinely shrinks below double range for spread zeros, so the degree is
    // allowed to drop (the representable low-order part survives). Callers
    // that need full-degree information check degree() on the result.
    for (const Complex& c : next.coeffs())
      if (!is_finite(c)) throw RangeError("root-squaring coefficient overflow");
  } else {
    check_coeffs(next, s.p.degree());
  }
  SquaringState out{s.h + 1, next, std::nullopt, s.log_scale_p, s.log_scale_q};
  if (normalize) {
    double m = max_coeff_mag(out.p);
    if (m > 0.0) {
      out.p = scale(out.p, Complex(1.0 / m));
      out.log_scale_p += std::log(m);
    }
  }
  return out;
}

SquaringState fg_step(const SquaringState& s, bool normalize) {
  if (!s.q) throw DomainError("fg_step requires an FG-initialized state");
  Poly e, o, a, b;
  even_odd_split(s.p, e, o);
  even_odd_split(*s.q, a, b);
  Poly qnext = add(mul(b, e), scale(mul(a, o), Complex(-1.0)));
  for (const Complex& c : qnext.coeffs())
    if (!is_finite(c)) throw RangeError("FG coefficient overflow");
  SquaringState out = dlg_step(s, normalize);
  if (normalize) {
    double m = max_coeff_mag(qnext);
    if (m > 0.0) {
      qnext = scale(qnext, Complex(1.0 / m));
      out.log_scale_q += std::log(m);
    }
  }
  out.q = std::move(qnext);
  return out;
}

Complex gemignani_estimate(const SquaringState& s) {
  if (!s.q) throw DomainError("gemignani_estimate requires an FG state");
  Complex num = s.q->at(0);
  Complex den = s.p.at(1);  // p_h'(0)
  if (den == Complex(0.0)) {
    if (num == Complex(0.0) && s.p.at(0) != Complex(0.0))
      throw DivByZeroError("p_h'(0) = 0: coincident extremal root radii (x^d - h^d type input)");
    throw DivByZeroError("p_h'(0) = 0: separation assumption fails");
  }
  Complex r = num / den;
  double comp = s.log_scale_q - s.log_scale_p;
  if (comp != 0.0) r *= std::exp(comp);
  if (!is_finite(r)) throw RangeError("gemignani estimate overflow");
  return r;
}

ExtremalRatios extremal_power_ratios(const SquaringState& s) {
  const Poly& p = s.p;
  int d = p.degree();
  if (p.at(0) == Complex(0.0)) throw DivByZeroError("p_h(0) = 0 in extremal ratio");
  if (p.at(d) == Complex(0.0)) throw DivByZeroError("leading coefficient vanished");
  return ExtremalRatios{-p.at(1) / p.at(0), -p.at(d - 1) / p.at(d)};
}

DescendResult descend(const std::vector<Poly>& levels, Complex y, int h) {
  if (static_cast<int>(levels.size()) < h + 1)
    throw DomainError("descend needs levels p_0..p_h");
  Complex cur = y;
  bool ambiguous = false;
  for (int i = h - 1; i >= 0; --i) {
    Complex cplus = std::sqrt(cur);
    Complex cminus = -cplus;
    double rplus = std::abs(eval(levels[static_cast<size_t>(i)], cplus));
    double rminus = std::abs(eval(levels[static_cast<size_t>(i)], cminus));
    double hi = std::max(rplus, rminus);
    if (std::abs(rplus - rminus) <= 0.1 * hi) {
      ambiguous = true;
      // tie-break: smaller |imag|, then nonnegative real part
      if (std::abs(cplus.imag()) < std::abs(cminus.imag()))
        cur = cplus;
      else if (std::abs(cminus.imag()) < std::abs(cplus.imag()))
        cur = cminus;
      else
        cur = (cplus.real() >= 0.0) ? cplus : cminus;
    } else {
      cur = (rplus <= rminus) ? cplus : cminus;
    }
  }
  return DescendResult{cur, ambiguous};
}

namespace {

Complex ratio_squared_rec(const NewtonOracle& oracle, Complex x, int h) {
  if (h == 0) return oracle.evaluate(x);
  Complex s = std::sqrt(x);
  if (std::abs(s) == 0.0) throw PoleError("ratio squaring undefined at x = 0");
  Complex a = ratio_squared_rec(oracle, s, h - 1);
  Complex b = ratio_squared_rec(oracle, -s, h - 1);
  return (a - b) / (2.0 * s);
}

}  // namespace

Complex ratio_squaring_eval(const NewtonOracle& oracle, Complex x, int h) {
  if (h < 0) throw DomainError("ratio_squaring_eval requires h >= 0");
  if (h > 20) throw DepthError("ratio squaring depth exceeds 20 (2^h evaluations)");
  Complex r = ratio_squared_rec(oracle, x, h);
  if (!is_finite(r)) throw RangeError("ratio squaring overflow");
  return r;
}

}  // namespace rootsum
