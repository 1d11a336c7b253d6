#include <doctest.h>

#include "qhook/ratq.hpp"
#include "qhook/series.hpp"

using namespace qhook;

namespace {

PolyQ one_plus_q() { return PolyQ(std::vector<mpz_class>{1, 1}); }

}  // namespace

TEST_CASE("polynomial products") {
  CHECK(PolyQ::one_minus_q(1) * one_plus_q() == PolyQ::one_minus_q(2));
  // (1-q)(1-q^2) = 1 - q - q^2 + q^3
  CHECK(PolyQ::one_minus_q(1) * PolyQ::one_minus_q(2) ==
        PolyQ(std::vector<mpz_class>{1, -1, -1, 1}));
  CHECK((PolyQ() * PolyQ::pochhammer(1, 5)).is_zero());
}

TEST_CASE("gcd canonicalization") {
  CHECK(PolyQ::gcd(PolyQ::one_minus_q(2), PolyQ::one_minus_q(3)) == PolyQ::one_minus_q(1));
  CHECK(PolyQ::gcd(PolyQ::one_minus_q(4), PolyQ::one_minus_q(6)) == PolyQ::one_minus_q(2));
  // the canonical gcd is content-free with positive lowest coefficient
  PolyQ p = PolyQ::one_minus_q(3).times_scalar(-6);
  CHECK(PolyQ::gcd(p, PolyQ()) == PolyQ::one_minus_q(3));
  CHECK(PolyQ::gcd(PolyQ(), p) == PolyQ::gcd(p, PolyQ()));
  CHECK(PolyQ::gcd(PolyQ(4), PolyQ(6)) == PolyQ(1));
}

TEST_CASE("binomial division fast paths") {
  PolyQ p = PolyQ::pochhammer(2, 3);
  PolyQ copy = p;
  CHECK(copy.try_div_one_minus_q(3));
  CHECK(copy * PolyQ::one_minus_q(3) == p);
  CHECK_FALSE(copy.try_div_one_minus_q(5));
  CHECK(p.divexact(PolyQ::one_minus_q(2)) == PolyQ::pochhammer(3, 2));
}

TEST_CASE("pochhammer") {
  CHECK(PolyQ::pochhammer(1, 0) == PolyQ(1));
  CHECK(PolyQ::pochhammer(1, 1) == PolyQ::one_minus_q(1));
  CHECK(PolyQ::pochhammer(2, 2) == PolyQ::one_minus_q(2) * PolyQ::one_minus_q(3));
}

TEST_CASE("pochhammer concatenation law") {
  for (long s = 0; s <= 6; ++s)
    for (long n = 0; n <= 6; ++n)
      for (long m = 0; m <= 6; ++m)
        CHECK(PolyQ::pochhammer(s, n) * PolyQ::pochhammer(s + n, m) == PolyQ::pochhammer(s, n + m));
}

TEST_CASE("rational normalization") {
  RatQ r(PolyQ::one_minus_q(2), PolyQ::one_minus_q(1));
  CHECK(r.num() == one_plus_q());
  CHECK(r.den() == PolyQ(1));

  RatQ x(PolyQ::pochhammer(1, 2).times_scalar(4), PolyQ::one_minus_q(3).times_scalar(-6));
  // Renormalizing a normalized value is a fixed point.
  CHECK(RatQ(x.num(), x.den()) == x);
  CHECK(x.den().trailing() > 0);

  CHECK(x + RatQ() == x);
  CHECK(RatQ(1) / RatQ(PolyQ::one_minus_q(1)) * RatQ(PolyQ::one_minus_q(1)) == RatQ(1));
  CHECK_THROWS_AS(x / RatQ(), std::domain_error);
}

TEST_CASE("rational q powers") {
  CHECK(RatQ::q_power(-2) * RatQ::q_power(5) == RatQ(PolyQ::q_power(3)));
  CHECK(RatQ::one_minus_q_power(-3) == -RatQ::q_power(-3) * RatQ(PolyQ::one_minus_q(3)));
  CHECK(RatQ::one_minus_q_power(0).is_zero());
}

TEST_CASE("series expansion") {
  TruncSeries geo = series_expand(RatQ(PolyQ(1), PolyQ::one_minus_q(1)), 3);
  for (int k = 0; k <= 3; ++k) CHECK(geo.coeff(k) == 1);

  TruncSeries one = series_expand(RatQ(PolyQ::one_minus_q(1), PolyQ::one_minus_q(1)), 5);
  CHECK(one == TruncSeries::one(5));

  TruncSeries parts = series_expand(
      RatQ(PolyQ(1), PolyQ::one_minus_q(1) * PolyQ::one_minus_q(2)), 4);
  mpq_class expect[] = {1, 1, 2, 2, 3};
  for (int k = 0; k <= 4; ++k) CHECK(parts.coeff(k) == expect[k]);

  CHECK_THROWS_AS(series_expand(RatQ(PolyQ(1), PolyQ::q_power(1)), 3), std::domain_error);
}

TEST_CASE("series multiplication is compatible with rational products") {
  RatQ a(PolyQ::pochhammer(1, 2), PolyQ::pochhammer(3, 2));
  RatQ b(PolyQ(std::vector<mpz_class>{2, 0, 1}), PolyQ::one_minus_q(4));
  const int N = 20;
  CHECK(series_expand(a * b, N) == series_expand(a, N) * series_expand(b, N));
}

TEST_CASE("truncated series helpers") {
  TruncSeries s = TruncSeries::one(6);
  s.div_one_minus_q(2);
  TruncSeries t = series_expand(RatQ(PolyQ(1), PolyQ::one_minus_q(2)), 6);
  CHECK(s == t);
  s.mul_one_minus_q(2);
  CHECK(s == TruncSeries::one(6));
  TruncSeries u = TruncSeries::one(6);
  u.add_coeff(5, mpq_class(7));
  CHECK(TruncSeries::one(6).first_mismatch(u) == 5);
  CHECK(u.first_mismatch(u) == -1);
}
