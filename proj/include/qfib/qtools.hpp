#pragma once

#include <vector>

#include "qfib/polynomial.hpp"
#include "qfib/power_series.hpp"

namespace qfib {

// Parity indicator: 0 for even n, 1 for odd n (correct for negative n too).
inline int xi(long long n) { return static_cast<int>(((n % 2) + 2) % 2); }

// Floor division rounding toward minus infinity, so floor_div(-1, 2) == -1.
// Used for every floor(n/2) exponent in the closed forms and identities.
inline long long floor_div(long long num, long long den) {
  long long quot = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --quot;
  return quot;
}

// Gaussian binomial coefficient [n choose k]_q computed freshly from the
// Pascal-type recurrence
//   [n choose k]_q = q^(n-k) [n-1 choose k-1]_q + [n-1 choose k]_q.
// Out-of-range arguments (k < 0, k > n, or n < 0) give zero.
Polynomial q_binomial(int n, int k);

// Triangle of Gaussian binomials filled once by the Pascal-type recurrence
// and then served by reference.  Grows on demand via ensure().
class QBinomialTable {
 public:
  explicit QBinomialTable(int max_n = 0) { ensure(max_n); }

  void ensure(int max_n);
  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  // Entry [n choose k]_q for n <= max_n(); the shared zero polynomial for
  // out-of-range k or negative n.
  const Polynomial& at(int n, int k) const;

 private:
  std::vector<std::vector<Polynomial>> rows_;
  static const Polynomial zero_;
};

// Finite q-Pochhammer product in x:
//   (c*x; q)_count = prod_{i=0}^{count-1} (1 - c * q^i * x)
// as a truncated series of the given order.
PowerSeries q_pochhammer_in_x(const Polynomial& c, int count, int order);

// Row generating function of the Gaussian binomials,
//   sum_{i>=0} [n+i choose i]_q x^i = 1 / (x; q)_{n+1},
// truncated at the given order.
PowerSeries q_binomial_series(int n, int order);

}  // namespace qfib
