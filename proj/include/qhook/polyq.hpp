#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qhook {

/// Univariate polynomial in q with arbitrary-precision integer coefficients.
///
/// Coefficients are stored densely by ascending degree with no trailing
/// zeros, so the zero polynomial is the unique empty representation.
class PolyQ {
 public:
  PolyQ() = default;
  explicit PolyQ(long c);
  explicit PolyQ(const mpz_class& c);
  explicit PolyQ(std::vector<mpz_class> coeffs);  // ascending degree

  static PolyQ q_power(long e);      // q^e, e >= 0
  static PolyQ one_minus_q(long e);  // 1 - q^e (zero when e = 0)
  /// (q^s; q^step)_n = prod_{i=0..n-1} (1 - q^{s+i*step}); the empty product is 1.
  static PolyQ pochhammer(long s, long n, long step = 1);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  int valuation() const;  // lowest nonzero degree; -1 for zero
  const mpz_class& coeff(int d) const;
  const mpz_class& leading() const;   // highest-degree coefficient
  const mpz_class& trailing() const;  // lowest-degree nonzero coefficient

  PolyQ operator-() const;
  PolyQ operator+(const PolyQ& o) const;
  PolyQ operator-(const PolyQ& o) const;
  PolyQ operator*(const PolyQ& o) const;
  PolyQ& operator+=(const PolyQ& o);
  PolyQ& operator-=(const PolyQ& o);
  PolyQ& operator*=(const PolyQ& o);
  bool operator==(const PolyQ& o) const { return c_ == o.c_; }
  bool operator!=(const PolyQ& o) const { return c_ != o.c_; }

  PolyQ times_scalar(const mpz_class& s) const;
  PolyQ shifted(long e) const;  // * q^e
  PolyQ pow(long k) const;

  /// In-place multiply by (1 - q^e), e >= 1. O(degree).
  void mul_one_minus_q(long e);
  /// In-place exact division by (1 - q^e) if it divides; returns false (and
  /// leaves *this untouched) otherwise. O(degree).
  bool try_div_one_minus_q(long e);

  /// Exact division; throws std::domain_error if o does not divide *this.
  PolyQ divexact(const PolyQ& o) const;

  mpz_class content() const;     // gcd of coefficients, >= 0 (0 for zero poly)
  PolyQ primitive_part() const;  // content removed, sign kept

  /// Canonical form: content 1 and positive trailing coefficient.
  PolyQ canonical() const;

  /// gcd over Z[q] including integer content, in canonical form.
  /// gcd(p, 0) = canonical(p).
  static PolyQ gcd(const PolyQ& a, const PolyQ& b);

  std::string str(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

}  // namespace qhook
