#include "qfib/genfun.hpp"

#include "qfib/errors.hpp"
#include "qfib/qtools.hpp"

namespace qfib {

namespace {

Polynomial ab() { return Polynomial::monomial(1, 1, 1, 0); }

// One application of (b x + x^2 eta): coefficient N picks up
// b g_{N-1} + q^(N-2) g_{N-2}.
PowerSeries apply_shift_step(const PowerSeries& g) {
  PowerSeries out(g.order());
  for (int n = 1; n <= g.order(); ++n) {
    Polynomial v = Polynomial::var_b() * g.coeff(n - 1);
    if (n >= 2) v += g.coeff(n - 2).scale_q_power(n - 2);
    out.set_coeff(n, v);
  }
  return out;
}

}  // namespace

PowerSeries solve_f_odd(int order) {
  PowerSeries c(order);
  for (int n = 0; n <= order; ++n) {
    Polynomial v;
    if (n == 1) v += Polynomial::one();
    if (n == 3) v -= Polynomial::one();
    if (n >= 2) {
      const Polynomial& prev = c.coeff(n - 2);
      v += ab() * prev + prev.scale_q_power(n - 2) + prev.scale_q_power(n - 3);
    }
    if (n >= 4) v -= c.coeff(n - 4).scale_q_power(2 * n - 7);
    c.set_coeff(n, v);
  }
  return c;
}

PowerSeries solve_w(int order) {
  const PowerSeries f = solve_f_odd(order);
  const Polynomial a_minus_b = Polynomial::var_a() - Polynomial::var_b();
  PowerSeries w(order);
  for (int n = 0; n <= order; ++n) {
    Polynomial v;
    if (n == 1) v += Polynomial::one();
    if (n >= 1) {
      v += a_minus_b * f.coeff(n - 1);
      v += Polynomial::var_b() * w.coeff(n - 1);
    }
    if (n >= 2) v += w.coeff(n - 2).scale_q_power(n - 2);
    w.set_coeff(n, v);
  }
  return w;
}

PowerSeries apply_w_operator(const PowerSeries& s,
                             const Polynomial& multiplier) {
  PowerSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) {
    Polynomial v = s.coeff(n);
    if (n >= 1) v -= multiplier * s.coeff(n - 1);
    if (n >= 2) v -= s.coeff(n - 2).scale_q_power(n - 2);
    out.set_coeff(n, v);
  }
  return out;
}

PowerSeries apply_w_operator(const PowerSeries& s) {
  return apply_w_operator(s, Polynomial::var_b());
}

PowerSeries apply_odd_part_operator(const PowerSeries& s) {
  if (!s.coeff(0).is_zero()) {
    throw DomainError("odd-part operator needs a series with zero constant term");
  }
  PowerSeries out(s.order());
  for (int n = 0; n <= s.order(); ++n) {
    Polynomial v = s.coeff(n);
    if (n >= 2) {
      const Polynomial& prev = s.coeff(n - 2);
      v -= ab() * prev + prev.scale_q_power(n - 2) + prev.scale_q_power(n - 3);
    }
    if (n >= 4) v += s.coeff(n - 4).scale_q_power(2 * n - 7);
    out.set_coeff(n, v);
  }
  return out;
}

PowerSeries operator_power_closed(int n, int order) {
  if (n < 0) throw DomainError("operator power needs n >= 0");
  if (order < 2 * n + 1) {
    throw DomainError("operator power of degree n needs order >= 2n+1");
  }
  QBinomialTable binomials(n);
  PowerSeries out(order);
  for (int j = 0; j <= n; ++j) {
    out.set_coeff(n + 1 + j, binomials.at(n, j) *
                                 Polynomial::monomial(1, 0, n - j, j * j));
  }
  return out;
}

PowerSeries operator_power_iterated(int n, int order) {
  if (n < 0) throw DomainError("operator power needs n >= 0");
  PowerSeries s = PowerSeries::x(order);
  for (int i = 0; i < n; ++i) s = apply_shift_step(s);
  return s;
}

PowerSeries expansion_series(int order) {
  const Polynomial a_minus_b = Polynomial::var_a() - Polynomial::var_b();
  // The odd-part series enters each summand with its argument scaled to
  // q^j x; a single unscaled factor pulled out of the sum breaks at x^4.
  PowerSeries f_at_qj = solve_f_odd(order);
  PowerSeries sum(order);
  for (int j = 0; 2 * j + 1 <= order; ++j) {
    if (j > 0) f_at_qj = eta(f_at_qj);
    const PowerSeries factor =
        PowerSeries::one(order) + f_at_qj.scale(a_minus_b);
    const PowerSeries reciprocal =
        q_binomial_series(j, order).scale_x(Polynomial::var_b());
    sum = sum + (reciprocal * factor)
                    .shift_x(2 * j + 1)
                    .scale(Polynomial::q_power(j * j));
  }
  return sum;
}

}  // namespace qfib
