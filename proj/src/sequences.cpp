#include "qfib/sequences.hpp"

#include <functional>

#include "qfib/errors.hpp"

namespace qfib {

namespace {

void check_index(int n) {
  if (n < 0) throw DomainError("sequence index must be non-negative");
}

// Extends a two-term recurrence cache up to index n.  multiplier(m) is the
// coefficient of the previous term and q_exponent(m) the power of q on the
// term before that, both as functions of the index m being produced.
void grow(std::vector<Polynomial>& cache, int n, Polynomial seed0,
          Polynomial seed1, const std::function<Polynomial(int)>& multiplier,
          const std::function<int(int)>& q_exponent) {
  if (cache.empty()) {
    cache.push_back(std::move(seed0));
    cache.push_back(std::move(seed1));
  }
  for (int m = static_cast<int>(cache.size()); m <= n; ++m) {
    Polynomial next = multiplier(m) * cache[m - 1] +
                      cache[m - 2].scale_q_power(q_exponent(m));
    cache.push_back(std::move(next));
  }
}

Polynomial ab_multiplier(int m) {
  return m % 2 == 0 ? Polynomial::var_a() : Polynomial::var_b();
}

Polynomial ab_power(long long e) {
  return Polynomial::monomial(1, static_cast<int>(e), static_cast<int>(e), 0);
}

}  // namespace

const Polynomial& SequenceSet::f(int n) {
  check_index(n);
  grow(f_, n, Polynomial{}, Polynomial::one(), ab_multiplier,
       [](int m) { return m - 2; });
  return f_[n];
}

const Polynomial& SequenceSet::f_hat(int n) {
  check_index(n);
  grow(f_hat_, n, Polynomial::one(), Polynomial{}, ab_multiplier,
       [](int m) { return m - 2; });
  return f_hat_[n];
}

const Polynomial& SequenceSet::d(int n) {
  check_index(n);
  grow(d_, n, Polynomial{}, Polynomial::one(),
       [](int) { return Polynomial::one(); }, [](int m) { return m - 2; });
  return d_[n];
}

const Polynomial& SequenceSet::f_shifted(int shift, int n) {
  check_index(n);
  if (shift < 0) throw DomainError("shift must be non-negative");
  auto& cache = shifted_[shift];
  // For even m the multiplier is a^xi(s+1) b^(1-xi(s+1)), for odd m the
  // exponents swap; shift s = 0 reproduces the plain sequence.
  const int on_a = xi(shift + 1);
  grow(cache, n, Polynomial{}, Polynomial::one(),
       [on_a](int m) {
         const int e = m % 2 == 0 ? on_a : 1 - on_a;
         return Polynomial::monomial(1, e, 1 - e, 0);
       },
       [shift](int m) { return m - 2 + shift; });
  return cache[n];
}

Polynomial f_closed(int n, QBinomialTable& binomials) {
  check_index(n);
  binomials.ensure(n - 1);
  const long long half = floor_div(n - 1, 2);
  Polynomial sum;
  for (long long l = 0; l <= half; ++l) {
    const int li = static_cast<int>(l);
    sum += binomials.at(n - li - 1, li) * ab_power(half - l) *
           Polynomial::q_power(li * li);
  }
  return Polynomial::monomial(1, xi(n - 1), 0, 0) * sum;
}

Polynomial f_hat_closed(int n, QBinomialTable& binomials) {
  if (n < 1) throw DomainError("closed form for the hat sequence needs n >= 1");
  binomials.ensure(n - 2);
  const long long half = floor_div(n - 2, 2);
  Polynomial sum;
  for (long long l = 0; l <= half; ++l) {
    const int li = static_cast<int>(l);
    sum += binomials.at(n - li - 2, li) * ab_power(half - l) *
           Polynomial::q_power(li * li + li);
  }
  return Polynomial::monomial(1, 0, xi(n), 0) * sum;
}

Polynomial cassini_lhs(SequenceSet& seqs, int n, int k) {
  return seqs.f(n) * seqs.f_hat(n + k) - seqs.f(n + k) * seqs.f_hat(n);
}

Polynomial cassini_rhs(int n, int k, QBinomialTable& binomials) {
  check_index(n);
  if (k < 1) throw DomainError("cassini offset k must be positive");
  binomials.ensure(k - 1);
  const long long half = floor_div(k - 1, 2);
  const int base_a = static_cast<int>(half) + xi(k + 1) * xi(n + 1);
  const int base_b = static_cast<int>(half) + xi(k + 1) * xi(n);
  Polynomial sum;
  for (int j = 0; 2 * j <= k - 1; ++j) {
    sum += binomials.at(k - 1 - j, j) *
           Polynomial::monomial(1, base_a - j, base_b - j, j * j + n * j);
  }
  const int sign = n % 2 == 0 ? -1 : 1;
  return Polynomial::constant(sign) *
         sum.scale_q_power(n * (n - 1) / 2);
}

}  // namespace qfib
