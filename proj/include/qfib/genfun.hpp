#pragma once

#include "qfib/power_series.hpp"

namespace qfib {

// The full generating function W(x) = sum_n F_n x^n is the unique series
// solution of
//   W = x + (a - b) x f(x) + (b x + x^2 eta) W,
// where f(x) is the odd part of W.  solve_w computes it degree by degree:
//   W_N = rhs_N + b W_{N-1} + q^(N-2) W_{N-2}.
PowerSeries solve_w(int order);

// The odd part f(x) = sum_n F_{2n+1} x^(2n+1) solved degree by degree from
// the division-free fixed point with right side x - x^3:
//   c_N = rhs_N + (ab + q^(N-2) + q^(N-3)) c_{N-2} - q^(2N-7) c_{N-4}.
// Mirrors the coefficient recurrence
//   F_{2n+1} = (ab + q^(2n-1) + q^(2n-2)) F_{2n-1} - q^(4n-5) F_{2n-3}.
PowerSeries solve_f_odd(int order);

// Applies 1 - multiplier*x - x^2 eta, the operator solve_w inverts; feeding
// it solve_w's output returns the right side x + (a - b) x f(x).
PowerSeries apply_w_operator(const PowerSeries& s,
                             const Polynomial& multiplier);
PowerSeries apply_w_operator(const PowerSeries& s);

// Applies the odd-part operator solve_f_odd inverts; feeding it
// solve_f_odd's output returns x - x^3.  The operator only acts on series
// with zero constant term and throws DomainError otherwise.
PowerSeries apply_odd_part_operator(const PowerSeries& s);

// Closed form of (b x + x^2 eta)^n applied to x:
//   x^(n+1) sum_{j=0}^{n} b^(n-j) q^(j^2) [n choose j]_q x^j.
// Needs order >= 2n+1 so the full polynomial fits; throws DomainError.
PowerSeries operator_power_closed(int n, int order);

// Companion that applies (b x + x^2 eta) to x literally n times.
PowerSeries operator_power_iterated(int n, int order);

// Product-form expansion of W:
//   W = (1 + (a - b) f(x)) * sum_j q^(j^2) x^(2j+1) / (b x; q)_{j+1},
// with each reciprocal realized by the Gaussian-binomial row series.
PowerSeries expansion_series(int order);

}  // namespace qfib
