#include <doctest.h>

#include "qhook/qintegral.hpp"

using namespace qhook;

namespace {

MPoly x(int nv, int i) { return MPoly::variable(nv, i); }

RatQ binom_ratio(long num_e, long den_e) {
  return RatQ(PolyQ::one_minus_q(num_e), PolyQ::one_minus_q(den_e));
}

}  // namespace

TEST_CASE("monomial simplex integrals") {
  CHECK(integrate_monomial_simplex({0}) == RatQ(1));
  for (int k = 1; k <= 5; ++k) CHECK(integrate_monomial_simplex({k}) == binom_ratio(1, k + 1));
  CHECK(integrate_monomial_simplex({1, 1}) ==
        RatQ(PolyQ::one_minus_q(1).pow(2), PolyQ::one_minus_q(2) * PolyQ::one_minus_q(4)));
}

TEST_CASE("simplex integrals") {
  CHECK(integrate_simplex(MPoly(2)).is_zero());
  CHECK(integrate_simplex(MPoly::constant(2, RatQ(1))) ==
        RatQ(PolyQ(1), PolyQ(std::vector<mpz_class>{1, 1})));

  // int (x1-x2)^2 = q / ((1+q)^2 (1+q+q^2))
  MPoly d = x(2, 0) - x(2, 1);
  RatQ expect(PolyQ::q_power(1),
              PolyQ(std::vector<mpz_class>{1, 1}).pow(2) * PolyQ(std::vector<mpz_class>{1, 1, 1}));
  CHECK(integrate_simplex(d * d) == expect);
}

TEST_CASE("factored and generic paths are observationally identical") {
  // several integer-coefficient integrands, including alternant products
  std::vector<MPoly> cases;
  cases.push_back((x(2, 0) - x(2, 1)) * (x(2, 0) - x(2, 1)));
  cases.push_back(alternant(3, {2, 1, 0}, {0, 1, 2}) * alternant(3, {3, 1, 0}, {0, 1, 2}));
  cases.push_back(x(3, 0) * x(3, 2) * alternant(3, {4, 2, 0}, {0, 1, 2}) -
                  MPoly::constant(3, RatQ(5)) * x(3, 1));
  for (const MPoly& f : cases)
    CHECK(integrate_simplex(f, SimplexPath::Factored) == integrate_simplex(f, SimplexPath::Generic));
  MPoly with_ratq = MPoly::constant(2, RatQ(PolyQ(1), PolyQ::one_minus_q(1))) * x(2, 0);
  CHECK_THROWS_AS(integrate_simplex(with_ratq, SimplexPath::Factored), std::invalid_argument);
  CHECK(integrate_simplex(with_ratq) ==
        RatQ(PolyQ::one_minus_q(1), PolyQ::one_minus_q(2) * PolyQ::one_minus_q(3)));
}

TEST_CASE("single steps") {
  // int_{y1}^{y2} x d_q x = (1-q)(y2^2 - y1^2)/(1-q^2): here over vars (x, y1, y2)
  MPoly f = x(3, 0);
  MPoly g = integrate_step(f, 0, Bound::variable(1), Bound::variable(2));
  RatQ w(PolyQ::one_minus_q(1), PolyQ::one_minus_q(2));
  MPoly expect(3);
  expect.add_term({0, 0, 2}, w);
  expect.add_term({0, 2, 0}, -w);
  CHECK(g == expect);

  // int_0^y 1 d_q x = y
  MPoly one = MPoly::constant(2, RatQ(1));
  CHECK(integrate_step(one, 0, Bound::zero(), Bound::variable(1)) == x(2, 1));

  // int_0^1 x^2 d_q x = (1-q)/(1-q^3)
  MPoly sq = x(1, 0) * x(1, 0);
  MPoly v = integrate_step(sq, 0, Bound::zero(), Bound::one());
  CHECK(v == MPoly::constant(1, binom_ratio(1, 3)));
}

TEST_CASE("region integration") {
  MPoly f = alternant(3, {3, 1, 0}, {0, 1, 2}) * x(3, 1);
  CHECK(integrate_region(f, Region::simplex(3)) == integrate_simplex(f));
  CHECK(integrate_region(MPoly(3), Region::simplex(3)).is_zero());

  Region missing{3, {{0, Bound::zero(), Bound::variable(1)}, {1, Bound::zero(), Bound::one()}}};
  CHECK_THROWS_AS(integrate_region(f, missing), std::invalid_argument);
  Region doubled{3,
                 {{0, Bound::zero(), Bound::variable(1)},
                  {0, Bound::zero(), Bound::one()},
                  {1, Bound::zero(), Bound::one()},
                  {2, Bound::zero(), Bound::one()}}};
  CHECK_THROWS_AS(integrate_region(f, doubled), std::invalid_argument);
  // bound referencing an already-integrated variable
  std::vector<Step> bad = {{1, Bound::zero(), Bound::one()}, {0, Bound::zero(), Bound::variable(1)}};
  CHECK_THROWS_AS(integrate_steps(f, bad), std::invalid_argument);
}

TEST_CASE("partition sum oracle basics") {
  CHECK(partition_sum_oracle(MPoly::constant(1, RatQ(1)), 5) == TruncSeries::one(5));
  CHECK(partition_sum_oracle(x(1, 0), 8) ==
        series_expand(binom_ratio(1, 2), 8));
  MPoly d = x(2, 0) - x(2, 1);
  CHECK(partition_sum_oracle(d * d, 12) == series_expand(integrate_simplex(d * d), 12));
}

TEST_CASE("oracle equivalence on all small monomials") {
  // both maps are linear, so monomials span every integrand the claim covers
  const int N = 25;
  for (int n = 1; n <= 3; ++n) {
    std::vector<ExpVec> monos;
    ExpVec e(static_cast<size_t>(n), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == n) {
        monos.push_back(e);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[static_cast<size_t>(pos)] = v;
        self(self, pos + 1, left - v);
      }
      e[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, 6);
    for (const ExpVec& m : monos) {
      MPoly f = MPoly::monomial(n, m, RatQ(1));
      CHECK(series_expand(integrate_simplex(f), N) == partition_sum_oracle(f, N));
    }
  }
  // and one composite with rational-function coefficients
  MPoly f = MPoly::constant(2, RatQ(PolyQ(1), PolyQ::one_minus_q(1))) * x(2, 0) * x(2, 1) -
            MPoly::constant(2, RatQ(3)) * x(2, 1);
  CHECK(series_expand(integrate_simplex(f), N) == partition_sum_oracle(f, N));
}

TEST_CASE("homogeneous change of variables") {
  // int f(x_1..x_{n-1}) x_n^k = (1-q)/(1-q^{n+k+d}) int f over the smaller simplex
  for (int n = 2; n <= 4; ++n) {
    std::vector<ExpVec> monos;
    ExpVec e(static_cast<size_t>(n - 1), 0);
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == n - 1) {
        monos.push_back(e);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[static_cast<size_t>(pos)] = v;
        self(self, pos + 1, left - v);
      }
      e[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, 5);
    for (const ExpVec& m : monos) {
      int d = 0;
      for (int v : m) d += v;
      for (int k = 0; k <= 3; ++k) {
        ExpVec big(m);
        big.push_back(k);
        RatQ lhs = integrate_simplex(MPoly::monomial(n, big, RatQ(1)));
        RatQ rhs = binom_ratio(1, n + k + d) * integrate_simplex(MPoly::monomial(n - 1, m, RatQ(1)));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("alternant expansion lemma") {
  // int x_n^k f a_{mu+delta_n} = (1-q)/(1-q^{|mu|+C(n+1,2)+k+d})
  //   * sum_l (-1)^{n-l} int f a_{expansion_l + delta_{n-1}}
  for (int n = 2; n <= 4; ++n) {
    for (const Partition& mu : partitions_in_box(n, 2)) {
      for (int k = 0; k <= 2; ++k) {
        // f = x_1^2 x_2 ... a homogeneous monomial in the first n-1 variables
        ExpVec fm(static_cast<size_t>(n), 0);
        fm[0] = 2;
        if (n >= 3) fm[1] = 1;
        int d = 2 + (n >= 3 ? 1 : 0);
        std::vector<int> exps, vars;
        Partition mup = mu.padded(n);
        for (int j = 1; j <= n; ++j) {
          exps.push_back(mup.part(j) + n - j);
          vars.push_back(j - 1);
        }
        ExpVec xnk(static_cast<size_t>(n), 0);
        xnk[static_cast<size_t>(n - 1)] = k;
        MPoly lhs_poly = MPoly::monomial(n, fm, RatQ(1)) * MPoly::monomial(n, xnk, RatQ(1)) *
                         alternant(n, exps, vars);
        RatQ lhs = integrate_simplex(lhs_poly);

        RatQ sum;
        for (int ell = 1; ell <= n; ++ell) {
          Partition hat = alternant_expansion_partition(mup, n, ell);
          std::vector<int> hexps, hvars;
          for (int j = 1; j <= n - 1; ++j) {
            hexps.push_back(hat.part(j) + n - 1 - j);
            hvars.push_back(j - 1);
          }
          ExpVec fsmall(fm.begin(), fm.end() - 1);
          RatQ inner = integrate_simplex(MPoly::monomial(n - 1, fsmall, RatQ(1)) *
                                         alternant(n - 1, hexps, hvars));
          sum += ((n - ell) % 2 == 0 ? inner : -inner);
        }
        long c2 = static_cast<long>(n + 1) * n / 2;
        RatQ rhs = binom_ratio(1, mup.sum() + c2 + k + d) * sum;
        CHECK(lhs == rhs);
      }
    }
  }
}
