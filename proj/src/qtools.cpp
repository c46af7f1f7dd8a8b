#include "qfib/qtools.hpp"

#include "qfib/errors.hpp"

namespace qfib {

const Polynomial QBinomialTable::zero_{};

void QBinomialTable::ensure(int max_n) {
  if (max_n < 0) max_n = 0;
  if (rows_.empty()) rows_.push_back({Polynomial::one()});
  for (int n = static_cast<int>(rows_.size()); n <= max_n; ++n) {
    std::vector<Polynomial> row(static_cast<std::size_t>(n) + 1);
    row[0] = Polynomial::one();
    row[n] = Polynomial::one();
    for (int k = 1; k < n; ++k) {
      row[k] = rows_[n - 1][k - 1].scale_q_power(n - k) + rows_[n - 1][k];
    }
    rows_.push_back(std::move(row));
  }
}

const Polynomial& QBinomialTable::at(int n, int k) const {
  if (n < 0 || k < 0 || k > n) return zero_;
  if (n > max_n()) {
    throw DomainError("q-binomial table holds rows up to n = " +
                      std::to_string(max_n()) + "; call ensure() first");
  }
  return rows_[n][k];
}

Polynomial q_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Polynomial{};
  QBinomialTable table(n);
  return table.at(n, k);
}

PowerSeries q_pochhammer_in_x(const Polynomial& c, int count, int order) {
  PowerSeries product = PowerSeries::one(order);
  for (int i = 0; i < count; ++i) {
    PowerSeries factor = PowerSeries::one(order);
    if (order >= 1) factor.set_coeff(1, -(c.scale_q_power(i)));
    product = product * factor;
  }
  return product;
}

PowerSeries q_binomial_series(int n, int order) {
  if (n < 0) throw DomainError("q-binomial series needs n >= 0");
  PowerSeries out(order);
  QBinomialTable table(n + order);
  for (int i = 0; i <= order; ++i) out.set_coeff(i, table.at(n + i, i));
  return out;
}

}  // namespace qfib
