#include "qfib/verify.hpp"

#include <functional>
#include <map>

#include "qfib/errors.hpp"
#include "qfib/genfun.hpp"
#include "qfib/polynomial.hpp"
#include "qfib/qtools.hpp"
#include "qfib/sequences.hpp"

namespace qfib {

bool VerificationReport::all_pass() const {
  for (const CheckRecord& r : records) {
    if (!r.pass) return false;
  }
  return true;
}

const CheckRecord* VerificationReport::first_failure() const {
  for (const CheckRecord& r : records) {
    if (!r.pass) return &r;
  }
  return nullptr;
}

namespace {

int default_or(int value, int fallback) {
  return value >= 0 ? value : fallback;
}

std::vector<int> sweep(const std::optional<int>& probe, int lo, int hi) {
  if (probe) return {*probe};
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

void add_record(VerificationReport& report, std::vector<long long> indices,
                const Polynomial& lhs, const Polynomial& rhs) {
  report.records.push_back(
      CheckRecord{report.identity, std::move(indices), lhs == rhs, lhs.str(),
                  rhs.str()});
}

Polynomial ab_power(long long e) {
  return Polynomial::monomial(1, static_cast<int>(e), static_cast<int>(e), 0);
}

void check_closed_form(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"n"};
  SequenceSet seqs;
  QBinomialTable binomials;
  for (int n : sweep(b.n, 0, default_or(b.max_n, 30))) {
    add_record(report, {n}, f_closed(n, binomials), seqs.f(n));
  }
}

void check_closed_form_fhat(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"n"};
  SequenceSet seqs;
  QBinomialTable binomials;
  for (int n : sweep(b.n, 1, default_or(b.max_n, 30))) {
    add_record(report, {n}, f_hat_closed(n, binomials), seqs.f_hat(n));
  }
}

void check_cassini(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"n", "k"};
  SequenceSet seqs;
  QBinomialTable binomials;
  for (int n : sweep(b.n, 0, default_or(b.max_n, 15))) {
    for (int k : sweep(b.k, 1, default_or(b.max_k, 10))) {
      add_record(report, {n, k}, cassini_lhs(seqs, n, k),
                 cassini_rhs(n, k, binomials));
    }
  }
}

// sum_{k=1}^{n+1} q^k F_k a^(xi(n) xi(k)) b^(xi(k+1)(1-xi(n)))
//   (ab)^floor((n-k+1)/2)  =  F_{n+3} - a^xi(n) (ab)^floor((n+2)/2)
void check_partial_sum(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"n"};
  SequenceSet seqs;
  for (int n : sweep(b.n, 0, default_or(b.max_n, 12))) {
    Polynomial lhs;
    for (int k = 1; k <= n + 1; ++k) {
      lhs += seqs.f(k) *
             Polynomial::monomial(1, xi(n) * xi(k), xi(k + 1) * (1 - xi(n)),
                                  k) *
             ab_power(floor_div(n - k + 1, 2));
    }
    const Polynomial rhs =
        seqs.f(n + 3) - Polynomial::monomial(1, xi(n), 0, 0) *
                            ab_power(floor_div(n + 2, 2));
    add_record(report, {n}, lhs, rhs);
  }
}

// a sum_{k=0}^{n} F_{2k+1} q^(n^2+n-k^2-k)  =  F_{2n+2}
void check_odd_index_sum(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"n"};
  SequenceSet seqs;
  for (int n : sweep(b.n, 0, default_or(b.max_n, 10))) {
    Polynomial lhs;
    for (int k = 0; k <= n; ++k) {
      lhs += seqs.f(2 * k + 1).scale_q_power(n * n + n - k * k - k);
    }
    add_record(report, {n}, Polynomial::var_a() * lhs, seqs.f(2 * n + 2));
  }
}

// F_{n+m+1}  =  F_{m+1} Fshift(m)_{n+1} + q^m F_m Fshift(m+1)_n
void check_convolution(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"m", "n"};
  SequenceSet seqs;
  const int max_sum = default_or(b.max_n, 12);
  for (int m : sweep(b.k, 0, max_sum)) {
    const int n_hi = b.n || b.k ? max_sum : max_sum - m;
    for (int n : sweep(b.n, 0, n_hi)) {
      const Polynomial lhs = seqs.f(n + m + 1);
      const Polynomial rhs =
          seqs.f(m + 1) * seqs.f_shifted(m, n + 1) +
          (seqs.f(m) * seqs.f_shifted(m + 1, n)).scale_q_power(m);
      add_record(report, {m, n}, lhs, rhs);
    }
  }
}

// F_{2n}  =  sum_{k=1}^{n} a^xi(k) q^((n-k)^2) [n choose k]_q
//   (ab)^floor(k/2) Fshift(2n-k)_k
void check_even_index(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"n"};
  SequenceSet seqs;
  QBinomialTable binomials;
  for (int n : sweep(b.n, 1, default_or(b.max_n, 8))) {
    binomials.ensure(n);
    Polynomial rhs;
    for (int k = 1; k <= n; ++k) {
      rhs += binomials.at(n, k) *
             Polynomial::monomial(1, xi(k), 0, (n - k) * (n - k)) *
             ab_power(floor_div(k, 2)) * seqs.f_shifted(2 * n - k, k);
    }
    add_record(report, {n}, seqs.f(2 * n), rhs);
  }
}

// F_{2n+2}  =  sum_{i,j} a (ab)^(n-i-j) q^(i^2+(n+i+1)j)
//   [n-j choose i]_q [n-i choose j]_q.
// The statement variant replaces the exponent with i^2+(n+i+j)j and stops
// matching at n = 2.
void check_median_square(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"n"};
  SequenceSet seqs;
  QBinomialTable binomials;
  for (int n : sweep(b.n, 0, default_or(b.max_n, 6))) {
    binomials.ensure(n);
    Polynomial rhs;
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        const int q_exp = b.median_variant == MedianVariant::kCorrected
                              ? i * i + (n + i + 1) * j
                              : i * i + (n + i + j) * j;
        rhs += binomials.at(n - j, i) * binomials.at(n - i, j) *
               Polynomial::monomial(1, n - i - j + 1, n - i - j, q_exp);
      }
    }
    add_record(report, {n}, seqs.f(2 * n + 2), rhs);
  }
}

void check_genfun_w(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"n"};
  const int order = default_or(b.order, default_or(b.max_n, 20));
  SequenceSet seqs;
  const PowerSeries w = solve_w(order);
  for (int n : sweep(b.n, 0, order)) {
    add_record(report, {n}, w.coeff(n), seqs.f(n));
  }
}

void check_genfun_odd(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"n"};
  const int order = default_or(b.order, default_or(b.max_n, 20));
  SequenceSet seqs;
  const PowerSeries c = solve_f_odd(order);
  for (int n : sweep(b.n, 0, order)) {
    const Polynomial rhs = n % 2 == 1 ? seqs.f(n) : Polynomial{};
    add_record(report, {n}, c.coeff(n), rhs);
  }
}

void check_genfun_expansion(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"n"};
  const int order = default_or(b.order, default_or(b.max_n, 16));
  const PowerSeries expanded = expansion_series(order);
  const PowerSeries solved = solve_w(order);
  for (int n : sweep(b.n, 0, order)) {
    add_record(report, {n}, expanded.coeff(n), solved.coeff(n));
  }
}

void check_operator_power(VerificationReport& report, const CheckBounds& b) {
  report.index_names = {"n", "j"};
  for (int n : sweep(b.n, 0, default_or(b.max_n, 12))) {
    const PowerSeries closed = operator_power_closed(n, 2 * n + 1);
    const PowerSeries iterated = operator_power_iterated(n, 2 * n + 1);
    for (int j : sweep(b.k, 0, 2 * n + 1)) {
      add_record(report, {n, j}, closed.coeff(j), iterated.coeff(j));
    }
  }
}

using Checker = std::function<void(VerificationReport&, const CheckBounds&)>;

const std::vector<std::pair<std::string, Checker>>& checkers() {
  static const std::vector<std::pair<std::string, Checker>> table = {
      {"closed-form", check_closed_form},
      {"closed-form-fhat", check_closed_form_fhat},
      {"cassini", check_cassini},
      {"partial-sum", check_partial_sum},
      {"odd-index-sum", check_odd_index_sum},
      {"convolution", check_convolution},
      {"even-index", check_even_index},
      {"median-square", check_median_square},
      {"genfun-w", check_genfun_w},
      {"genfun-odd", check_genfun_odd},
      {"genfun-expansion", check_genfun_expansion},
      {"operator-power", check_operator_power},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, checker] : checkers()) out.push_back(name);
    return out;
  }();
  return names;
}

VerificationReport check_identity(const std::string& name,
                                  const CheckBounds& bounds) {
  for (const auto& [known, checker] : checkers()) {
    if (known == name) {
      VerificationReport report;
      report.identity = name;
      checker(report, bounds);
      return report;
    }
  }
  std::string valid;
  for (const std::string& known : identity_names()) {
    if (!valid.empty()) valid += ", ";
    valid += known;
  }
  throw DomainError("unknown identity '" + name + "'; valid names: " + valid);
}

}  // namespace qfib
