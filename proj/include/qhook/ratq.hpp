#pragma once

#include <map>
#include <string>

#include "qhook/polyq.hpp"

namespace qhook {

/// Reduced fraction of two PolyQ values: gcd(num, den) is a unit (including
/// integer content) and den's lowest-degree coefficient is positive.
/// Equality is representation equality.
class RatQ {
 public:
  RatQ() : num_(), den_(1) {}
  RatQ(long n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit RatQ(const mpz_class& n) : num_(n), den_(1) {}
  explicit RatQ(PolyQ num) : num_(std::move(num)), den_(1) {}
  RatQ(PolyQ num, PolyQ den);

  /// q^e for any integer e (negative e lands in the denominator).
  static RatQ q_power(long e);
  /// 1 - q^e for any integer e (zero when e = 0).
  static RatQ one_minus_q_power(long e);

  const PolyQ& num() const { return num_; }
  const PolyQ& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integer_constant() const { return den_.is_one() && num_.is_constant(); }

  RatQ operator-() const;
  RatQ operator+(const RatQ& o) const;
  RatQ operator-(const RatQ& o) const;
  RatQ operator*(const RatQ& o) const;
  RatQ operator/(const RatQ& o) const;  // throws std::domain_error on /0
  RatQ& operator+=(const RatQ& o) { return *this = *this + o; }
  RatQ& operator-=(const RatQ& o) { return *this = *this - o; }
  RatQ& operator*=(const RatQ& o) { return *this = *this * o; }
  RatQ& operator/=(const RatQ& o) { return *this = *this / o; }
  bool operator==(const RatQ& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatQ& o) const { return !(*this == o); }

  RatQ inverse() const;
  RatQ pow(long k) const;  // k may be negative

  std::string str(const std::string& var = "q") const;

 private:
  void reduce();
  PolyQ num_, den_;
};

/// Builder for values of the shape  sign * q^a * prod_e (1-q^e)^{m_e}  with
/// m_e in Z. Every closed form in the catalog has this shape; collecting the
/// factors first means the final RatQ needs no nontrivial gcd.
class QProduct {
 public:
  QProduct& times_q(long e) {
    qpow_ += e;
    return *this;
  }
  QProduct& negate() {
    sign_ = -sign_;
    return *this;
  }
  QProduct& times_one_minus(long e, int mult = 1);
  QProduct& times_one_plus(long e, int mult = 1);  // (1+q^e) = (1-q^{2e})/(1-q^e)
  /// (q^s; q^step)_n to the power mult.
  QProduct& times_poch(long s, long n, int mult = 1, long step = 1);
  RatQ value() const;

 private:
  int sign_ = 1;
  bool zero_ = false;
  long qpow_ = 0;
  std::map<long, int> fac_;  // exponent e -> net multiplicity of (1-q^e)
};

}  // namespace qhook
