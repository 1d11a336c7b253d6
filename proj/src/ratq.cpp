#include "qhook/ratq.hpp"

#include <stdexcept>

namespace qhook {

RatQ::RatQ(PolyQ num, PolyQ den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RatQ: zero denominator");
  reduce();
}

void RatQ::reduce() {
  if (num_.is_zero()) {
    den_ = PolyQ(1);
    return;
  }
  PolyQ g = PolyQ::gcd(num_, den_);  // content-1 polynomial gcd
  if (!g.is_one()) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  mpz_class cg;
  mpz_class cn = num_.content(), cd = den_.content();
  mpz_gcd(cg.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (cg > 1) {
    num_ = num_.divexact(PolyQ(cg));
    den_ = den_.divexact(PolyQ(cg));
  }
  if (den_.trailing() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatQ RatQ::q_power(long e) {
  RatQ r;
  if (e >= 0) {
    r.num_ = PolyQ::q_power(e);
    r.den_ = PolyQ(1);
  } else {
    r.num_ = PolyQ(1);
    r.den_ = PolyQ::q_power(-e);
  }
  return r;
}

RatQ RatQ::one_minus_q_power(long e) {
  if (e >= 0) return RatQ(PolyQ::one_minus_q(e));
  // 1 - q^{-a} = -q^{-a}(1 - q^a)
  return RatQ(-PolyQ::one_minus_q(-e), PolyQ::q_power(-e));
}

RatQ RatQ::operator-() const {
  RatQ r(*this);
  r.num_ = -r.num_;
  return r;
}

RatQ RatQ::operator+(const RatQ& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  return RatQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatQ RatQ::operator-(const RatQ& o) const { return *this + (-o); }

RatQ RatQ::operator*(const RatQ& o) const {
  if (is_zero() || o.is_zero()) return RatQ();
  // Cross-reduce before the big multiply to keep intermediate degrees down.
  PolyQ g1 = PolyQ::gcd(num_, o.den_);
  PolyQ g2 = PolyQ::gcd(o.num_, den_);
  PolyQ n1 = g1.is_one() ? num_ : num_.divexact(g1);
  PolyQ d2 = g1.is_one() ? o.den_ : o.den_.divexact(g1);
  PolyQ n2 = g2.is_one() ? o.num_ : o.num_.divexact(g2);
  PolyQ d1 = g2.is_one() ? den_ : den_.divexact(g2);
  return RatQ(n1 * n2, d1 * d2);
}

RatQ RatQ::operator/(const RatQ& o) const { return *this * o.inverse(); }

RatQ RatQ::inverse() const {
  if (is_zero()) throw std::domain_error("RatQ::inverse: division by zero");
  RatQ r;
  r.num_ = den_;
  r.den_ = num_;
  if (r.den_.trailing() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RatQ RatQ::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  RatQ r(1), b(*this);
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return r;
}

std::string RatQ::str(const std::string& var) const {
  if (den_.is_one()) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

QProduct& QProduct::times_one_minus(long e, int mult) {
  if (mult == 0) return *this;
  if (e == 0) {
    if (mult > 0)
      zero_ = true;
    else
      throw std::domain_error("QProduct: division by (1 - q^0)");
    return *this;
  }
  if (e < 0) {
    // (1 - q^{-a}) = -q^{-a} (1 - q^a)
    e = -e;
    qpow_ -= static_cast<long>(mult) * e;
    if (mult % 2 != 0) sign_ = -sign_;
  }
  fac_[e] += mult;
  if (fac_[e] == 0) fac_.erase(e);
  return *this;
}

QProduct& QProduct::times_one_plus(long e, int mult) {
  if (e < 0) {
    // (1 + q^{-a}) = q^{-a} (1 + q^a)
    e = -e;
    qpow_ -= static_cast<long>(mult) * e;
  }
  if (e == 0) throw std::domain_error("QProduct: (1 + q^0) factor is the constant 2");
  times_one_minus(2 * e, mult);
  times_one_minus(e, -mult);
  return *this;
}

QProduct& QProduct::times_poch(long s, long n, int mult, long step) {
  for (long i = 0; i < n; ++i) times_one_minus(s + i * step, mult);
  return *this;
}

RatQ QProduct::value() const {
  if (zero_) return RatQ();
  PolyQ num(sign_), den(1);
  for (const auto& [e, m] : fac_) {
    for (int i = 0; i < m; ++i) num.mul_one_minus_q(e);
    for (int i = 0; i < -m; ++i) den.mul_one_minus_q(e);
  }
  RatQ r(std::move(num), std::move(den));
  return r * RatQ::q_power(qpow_);
}

}  // namespace qhook
