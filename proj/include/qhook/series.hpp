#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qhook/ratq.hpp"

namespace qhook {

/// Truncated formal power series in q with exact rational coefficients.
/// Holds coefficients of q^0 .. q^order inclusive; arithmetic never touches
/// degrees above the order.
class TruncSeries {
 public:
  explicit TruncSeries(int order);
  static TruncSeries one(int order);

  int order() const { return order_; }
  const mpq_class& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  void set_coeff(int k, const mpq_class& v) { c_[static_cast<size_t>(k)] = v; }
  void add_coeff(int k, const mpq_class& v) { c_[static_cast<size_t>(k)] += v; }

  TruncSeries operator+(const TruncSeries& o) const;
  TruncSeries operator-(const TruncSeries& o) const;
  TruncSeries operator*(const TruncSeries& o) const;
  TruncSeries times(const mpq_class& s) const;
  bool operator==(const TruncSeries& o) const { return order_ == o.order_ && c_ == o.c_; }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  void mul_one_minus_q(long e);  // in place, truncated
  void div_one_minus_q(long e);  // in place; multiplies by the geometric series
  TruncSeries truncated(int new_order) const;

  /// Degree of the first differing coefficient, or -1 if equal up to
  /// min(order, o.order).
  int first_mismatch(const TruncSeries& o) const;

  std::string str(const std::string& var = "q") const;

 private:
  int order_;
  std::vector<mpq_class> c_;
};

/// Power-series expansion of r up to degree N. Requires den(r) to have a
/// nonzero constant term; throws std::domain_error otherwise.
TruncSeries series_expand(const RatQ& r, int N);

}  // namespace qhook
