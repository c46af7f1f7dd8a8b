#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace qfib {

// Monomial a^deg_a * b^deg_b * q^deg_q.  Exponents are non-negative.
struct Monomial {
  int deg_a = 0;
  int deg_b = 0;
  int deg_q = 0;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: ascending q-degree, then descending a-degree,
// then descending b-degree.  Map iteration order is rendering order.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const {
    if (x.deg_q != y.deg_q) return x.deg_q < y.deg_q;
    if (x.deg_a != y.deg_a) return x.deg_a > y.deg_a;
    return x.deg_b > y.deg_b;
  }
};

// Sparse polynomial in Z[a,b,q] with arbitrary-precision integer
// coefficients.  Value semantics; all operations return new values and
// never keep zero coefficients in the term map.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, mpz_class, MonomialOrder>;

  Polynomial() = default;

  static Polynomial constant(const mpz_class& value);
  static Polynomial constant(long value) { return constant(mpz_class(value)); }
  static Polynomial monomial(const mpz_class& coeff, int deg_a, int deg_b,
                             int deg_q);
  static Polynomial one() { return constant(1); }
  static Polynomial var_a() { return monomial(1, 1, 0, 0); }
  static Polynomial var_b() { return monomial(1, 0, 1, 0); }
  static Polynomial var_q() { return monomial(1, 0, 0, 1); }
  static Polynomial q_power(int k) { return monomial(1, 0, 0, k); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Coefficient of the given monomial; zero when absent.
  mpz_class coeff(const Monomial& m) const;

  // Adds coeff * m, erasing the entry if the sum cancels.
  void add_term(const Monomial& m, const mpz_class& coeff);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Multiplies every term by q^k.
  Polynomial scale_q_power(int k) const;

  Polynomial pow(unsigned exponent) const;

  // Substitutes integers for all three variables.
  mpz_class evaluate(const mpz_class& a, const mpz_class& b,
                     const mpz_class& q) const;

  // Substitutes integers for any subset of the variables, leaving the
  // rest symbolic.
  Polynomial specialize(const std::optional<mpz_class>& a,
                        const std::optional<mpz_class>& b,
                        const std::optional<mpz_class>& q) const;

  // Canonical text form, e.g. "a^2*b^2 + a*b*q + q^4"; zero renders as "0".
  std::string str() const;

  // Inverse of str(); accepts any term order and surplus whitespace.
  // Throws ParseError on malformed input.
  static Polynomial parse(std::string_view text);

 private:
  TermMap terms_;
};

}  // namespace qfib
