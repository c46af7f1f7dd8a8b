#pragma once

#include <map>
#include <vector>

#include "qfib/polynomial.hpp"
#include "qfib/qtools.hpp"

namespace qfib {

// Cached recurrence values for the biperiodic q-Fibonacci family.
//
//   f:      F_0 = 0, F_1 = 1,
//           F_n = a F_{n-1} + q^(n-2) F_{n-2}   (n even)
//           F_n = b F_{n-1} + q^(n-2) F_{n-2}   (n odd)
//   f_hat:  same recurrence with seeds 1, 0
//   d:      F_n at a = b = 1 via its own recurrence
//           D_n = D_{n-1} + q^(n-2) D_{n-2}
//   f_shifted(s, .): seeds 0, 1 with the multiplier parity steered by s
//           and the q exponent raised to n-2+s
//
// References returned stay valid while the set is alive; growing a cache
// never moves already-computed entries out from under callers.
class SequenceSet {
 public:
  const Polynomial& f(int n);
  const Polynomial& f_hat(int n);
  const Polynomial& d(int n);
  const Polynomial& f_shifted(int shift, int n);

 private:
  std::vector<Polynomial> f_;
  std::vector<Polynomial> f_hat_;
  std::vector<Polynomial> d_;
  std::map<int, std::vector<Polynomial>> shifted_;
};

// Closed form of F_n as a weighted sum of Gaussian binomials:
//   F_n = a^xi(n-1) * sum_l [n-l-1 choose l]_q (ab)^(floor((n-1)/2)-l) q^(l^2).
// The empty sum makes n = 0 give 0 without a special case.
Polynomial f_closed(int n, QBinomialTable& binomials);

// Companion closed form for the sequence with seeds 1, 0:
//   Fhat_n = b^xi(n) * sum_l [n-l-2 choose l]_q (ab)^(floor((n-2)/2)-l) q^(l^2+l)
// for n >= 1; n = 0 is outside the formula's domain and throws DomainError.
Polynomial f_hat_closed(int n, QBinomialTable& binomials);

// Two sides of the Cassini-type identity
//   F_n Fhat_{n+k} - F_{n+k} Fhat_n =
//     (-1)^(n-1) q^C(n,2) * sum_j [k-1-j choose j]_q
//       a^(floor((k-1)/2) + xi(k+1) xi(n+1) - j)
//       b^(floor((k-1)/2) + xi(k+1) xi(n)   - j) q^(j^2 + n j)
// where C(n,2) = n(n-1)/2 and the sum runs while the binomial is nonzero.
Polynomial cassini_lhs(SequenceSet& seqs, int n, int k);
Polynomial cassini_rhs(int n, int k, QBinomialTable& binomials);

}  // namespace qfib
