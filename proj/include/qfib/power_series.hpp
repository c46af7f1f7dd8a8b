#pragma once

#include <vector>

#include "qfib/polynomial.hpp"

namespace qfib {

// Truncated formal power series in x with coefficients in Z[a,b,q].
// A series of order N carries the coefficients of x^0 .. x^N; every
// operation truncates to the smaller order of its operands.
class PowerSeries {
 public:
  explicit PowerSeries(int order);

  static PowerSeries zero(int order) { return PowerSeries(order); }
  static PowerSeries one(int order);
  static PowerSeries x(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const Polynomial& coeff(int i) const { return coeffs_.at(i); }
  void set_coeff(int i, Polynomial value) { coeffs_.at(i) = std::move(value); }

  PowerSeries truncated(int new_order) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& lhs, const PowerSeries& rhs);
  friend PowerSeries operator-(const PowerSeries& lhs, const PowerSeries& rhs);
  friend PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs);

  // Multiplies every coefficient by the given polynomial.
  PowerSeries scale(const Polynomial& factor) const;

  // Multiplies by x^k; the top k coefficients shift out.
  PowerSeries shift_x(int k) const;

  // Substitutes x -> factor * x, so coefficient i picks up factor^i.
  PowerSeries scale_x(const Polynomial& factor) const;

  // Equality up to the smaller of the two orders.
  bool agrees_with(const PowerSeries& other) const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  std::vector<Polynomial> coeffs_;
};

// Substitution operator x -> q*x: coefficient i is scaled by q^i.
PowerSeries eta(const PowerSeries& s);

// The composite (q*x)^2 followed by x -> q*x: coefficient m of the result
// is q^m times coefficient m-2 of the input, and equals q^2 * x^2 * eta(s).
PowerSeries eta2(const PowerSeries& s);

}  // namespace qfib
