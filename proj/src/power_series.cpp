#include "qfib/power_series.hpp"

#include <algorithm>

#include "qfib/errors.hpp"

namespace qfib {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw DomainError("series order must be non-negative");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries PowerSeries::one(int order) {
  PowerSeries s(order);
  s.coeffs_[0] = Polynomial::one();
  return s;
}

PowerSeries PowerSeries::x(int order) {
  PowerSeries s(order);
  if (order >= 1) s.coeffs_[1] = Polynomial::one();
  return s;
}

PowerSeries PowerSeries::truncated(int new_order) const {
  PowerSeries out(std::min(new_order, order()));
  for (int i = 0; i <= out.order(); ++i) out.coeffs_[i] = coeffs_[i];
  return out;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out(order());
  for (int i = 0; i <= order(); ++i) out.coeffs_[i] = -coeffs_[i];
  return out;
}

PowerSeries operator+(const PowerSeries& lhs, const PowerSeries& rhs) {
  PowerSeries out(std::min(lhs.order(), rhs.order()));
  for (int i = 0; i <= out.order(); ++i) {
    out.coeffs_[i] = lhs.coeffs_[i] + rhs.coeffs_[i];
  }
  return out;
}

PowerSeries operator-(const PowerSeries& lhs, const PowerSeries& rhs) {
  PowerSeries out(std::min(lhs.order(), rhs.order()));
  for (int i = 0; i <= out.order(); ++i) {
    out.coeffs_[i] = lhs.coeffs_[i] - rhs.coeffs_[i];
  }
  return out;
}

PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs) {
  PowerSeries out(std::min(lhs.order(), rhs.order()));
  for (int i = 0; i <= out.order(); ++i) {
    if (lhs.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= out.order(); ++j) {
      if (rhs.coeffs_[j].is_zero()) continue;
      out.coeffs_[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return out;
}

PowerSeries PowerSeries::scale(const Polynomial& factor) const {
  PowerSeries out(order());
  for (int i = 0; i <= order(); ++i) out.coeffs_[i] = coeffs_[i] * factor;
  return out;
}

PowerSeries PowerSeries::shift_x(int k) const {
  PowerSeries out(order());
  for (int i = k; i <= order(); ++i) out.coeffs_[i] = coeffs_[i - k];
  return out;
}

PowerSeries PowerSeries::scale_x(const Polynomial& factor) const {
  PowerSeries out(order());
  Polynomial power = Polynomial::one();
  for (int i = 0; i <= order(); ++i) {
    out.coeffs_[i] = coeffs_[i] * power;
    power *= factor;
  }
  return out;
}

bool PowerSeries::agrees_with(const PowerSeries& other) const {
  const int shared = std::min(order(), other.order());
  for (int i = 0; i <= shared; ++i) {
    if (coeffs_[i] != other.coeffs_[i]) return false;
  }
  return true;
}

PowerSeries eta(const PowerSeries& s) {
  PowerSeries out(s.order());
  for (int i = 0; i <= s.order(); ++i) {
    out.set_coeff(i, s.coeff(i).scale_q_power(i));
  }
  return out;
}

PowerSeries eta2(const PowerSeries& s) {
  PowerSeries out(s.order());
  for (int m = 2; m <= s.order(); ++m) {
    out.set_coeff(m, s.coeff(m - 2).scale_q_power(m));
  }
  return out;
}

}  // namespace qfib
