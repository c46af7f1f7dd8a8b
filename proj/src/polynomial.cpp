#include "qfib/polynomial.hpp"

#include <cctype>
#include <utility>

#include "qfib/errors.hpp"

namespace qfib {

namespace {

mpz_class int_pow(const mpz_class& base, int exponent) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exponent));
  return out;
}

}  // namespace

Polynomial Polynomial::constant(const mpz_class& value) {
  Polynomial p;
  p.add_term(Monomial{}, value);
  return p;
}

Polynomial Polynomial::monomial(const mpz_class& coeff, int deg_a, int deg_b,
                                int deg_q) {
  Polynomial p;
  p.add_term(Monomial{deg_a, deg_b, deg_q}, coeff);
  return p;
}

mpz_class Polynomial::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  Polynomial out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) {
      out.add_term(Monomial{ml.deg_a + mr.deg_a, ml.deg_b + mr.deg_b,
                            ml.deg_q + mr.deg_q},
                   cl * cr);
    }
  }
  return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial Polynomial::scale_q_power(int k) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    out.terms_.emplace(Monomial{m.deg_a, m.deg_b, m.deg_q + k}, c);
  }
  return out;
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial out = one();
  for (unsigned i = 0; i < exponent; ++i) out *= *this;
  return out;
}

mpz_class Polynomial::evaluate(const mpz_class& a, const mpz_class& b,
                               const mpz_class& q) const {
  mpz_class total = 0;
  for (const auto& [m, c] : terms_) {
    total += c * int_pow(a, m.deg_a) * int_pow(b, m.deg_b) * int_pow(q, m.deg_q);
  }
  return total;
}

Polynomial Polynomial::specialize(const std::optional<mpz_class>& a,
                                  const std::optional<mpz_class>& b,
                                  const std::optional<mpz_class>& q) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    mpz_class coeff = c;
    Monomial reduced = m;
    if (a) {
      coeff *= int_pow(*a, m.deg_a);
      reduced.deg_a = 0;
    }
    if (b) {
      coeff *= int_pow(*b, m.deg_b);
      reduced.deg_b = 0;
    }
    if (q) {
      coeff *= int_pow(*q, m.deg_q);
      reduced.deg_q = 0;
    }
    out.add_term(reduced, coeff);
  }
  return out;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const mpz_class magnitude = abs(c);
    const bool has_vars = m.deg_a > 0 || m.deg_b > 0 || m.deg_q > 0;
    bool need_star = false;
    if (!has_vars || magnitude != 1) {
      out += magnitude.get_str();
      need_star = has_vars;
    }
    const std::pair<char, int> factors[] = {
        {'a', m.deg_a}, {'b', m.deg_b}, {'q', m.deg_q}};
    for (const auto& [name, deg] : factors) {
      if (deg == 0) continue;
      if (need_star) out += '*';
      out += name;
      if (deg > 1) {
        out += '^';
        out += std::to_string(deg);
      }
      need_star = true;
    }
  }
  return out;
}

namespace {

// Recursive-descent reader for the canonical grammar:
//   poly   := ws term (ws ("+"|"-") ws term)* ws
//   term   := integer | [integer "*"] factor ("*" factor)*
//   factor := ("a"|"b"|"q") ["^" integer]
class PolyReader {
 public:
  explicit PolyReader(std::string_view text) : text_(text) {}

  Polynomial read() {
    Polynomial out;
    skip_ws();
    if (at_end()) throw ParseError("empty input", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    while (true) {
      read_term(out, negative);
      skip_ws();
      if (at_end()) break;
      const char sign = peek();
      if (sign != '+' && sign != '-') {
        throw ParseError("expected '+', '-', or end of input", pos_);
      }
      take();
      negative = sign == '-';
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }

  bool at_digit() const {
    return !at_end() && std::isdigit(static_cast<unsigned char>(peek()));
  }

  bool at_var() const {
    return !at_end() && (peek() == 'a' || peek() == 'b' || peek() == 'q');
  }

  std::string read_digits(const char* what) {
    if (!at_digit()) throw ParseError(std::string("expected ") + what, pos_);
    std::string digits;
    while (at_digit()) digits += take();
    return digits;
  }

  int read_exponent() {
    const std::size_t start = pos_;
    const std::string digits = read_digits("exponent digits");
    if (digits.size() > 6) throw ParseError("exponent too large", start);
    return std::stoi(digits);
  }

  void read_term(Polynomial& out, bool negative) {
    skip_ws();
    mpz_class coeff = 1;
    bool saw_integer = false;
    if (at_digit()) {
      coeff = mpz_class(read_digits("coefficient digits"));
      saw_integer = true;
      skip_ws();
      if (at_end() || peek() == '+' || peek() == '-') {
        out.add_term(Monomial{}, negative ? -coeff : coeff);
        return;
      }
      if (peek() != '*') {
        throw ParseError("expected '*', '+', '-', or end of input", pos_);
      }
      take();
      skip_ws();
    }
    if (!at_var()) {
      throw ParseError(saw_integer ? "expected variable 'a', 'b', or 'q'"
                                   : "expected term",
                       pos_);
    }
    Monomial m;
    while (true) {
      const char var = take();
      int exponent = 1;
      if (!at_end() && peek() == '^') {
        take();
        exponent = read_exponent();
      }
      switch (var) {
        case 'a': m.deg_a += exponent; break;
        case 'b': m.deg_b += exponent; break;
        default: m.deg_q += exponent; break;
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      take();
      skip_ws();
      if (!at_var()) throw ParseError("expected variable 'a', 'b', or 'q'", pos_);
    }
    out.add_term(m, negative ? -coeff : coeff);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) {
  return PolyReader(text).read();
}

}  // namespace qfib
