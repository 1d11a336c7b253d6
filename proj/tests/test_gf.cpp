#include <doctest.h>

#include "qhook/gf.hpp"

using namespace qhook;

TEST_CASE("truncated generating functions") {
  TruncSeries c2 = gf_truncated(build_chain(2), 4);
  mpq_class expect[] = {1, 1, 2, 2, 3};
  for (int k = 0; k <= 4; ++k) CHECK(c2.coeff(k) == expect[k]);
  CHECK(c2 == series_expand(RatQ(PolyQ(1), PolyQ::pochhammer(1, 2)), 4));

  TruncSeries a2 = gf_truncated(build_antichain(2), 2);
  CHECK(a2.coeff(0) == 1);
  CHECK(a2.coeff(1) == 2);
  CHECK(a2.coeff(2) == 3);

  CHECK(gf_truncated(Poset(0, {}), 3) == TruncSeries::one(3));
}

TEST_CASE("hook products") {
  TruncSeries s = hook_product_series({3, 1, 1}, 3);
  mpq_class expect[] = {1, 2, 3, 5};
  for (int k = 0; k <= 3; ++k) CHECK(s.coeff(k) == expect[k]);
  CHECK(hook_product_series({1, 2, 3}, 10) ==
        series_expand(RatQ(PolyQ(1), PolyQ::pochhammer(1, 3)), 10));
  CHECK(hook_product_series({}, 4) == TruncSeries::one(4));
  CHECK_THROWS_AS(hook_product_series({0}, 4), std::invalid_argument);
}

TEST_CASE("hook length formula checks") {
  CHECK(check_hlf(build_young(Partition{4, 3, 1}), 30, "young-4-3-1").match);
  CHECK(check_hlf(build_shifted_young(Partition{6, 4, 1}), 30, "shifted-6-4-1").match);
  CHECK(check_hlf(build_chain(5), 30, "chain-5").match);
  GFReport rep = check_hlf(build_chain(2), 10, "chain-2");
  CHECK(rep.line().find("GF chain-2 N=10 MATCH") == 0);
}

TEST_CASE("product rule for disjoint unions") {
  std::vector<Poset> pool = {build_chain(3), build_young(Partition{2, 1}), build_antichain(2),
                             build_shifted_young(Partition{2, 1})};
  const int N = 15;
  for (const Poset& a : pool)
    for (const Poset& b : pool)
      CHECK(gf_truncated(disjoint_union(a, b), N) == gf_truncated(a, N) * gf_truncated(b, N));
}

TEST_CASE("closed-form generating function via the diagonal q-integral") {
  XSet x1 = {{Partition{}, 2, 1}, {Partition{}, 2, 1}};
  RatQ g = gf_via_qintegral(2, x1, 0);
  Poset p = build_PnmX(2, 0, x1);
  CHECK(series_expand(g, 25) == gf_truncated(p, 25));
  CHECK(series_expand(g, 25) == hook_product_series(hook_lengths(p), 25));

  // chain prefactor: GF(P_n^m) = GF(P_n) / (q^{p+1};q)_m
  RatQ g1 = gf_via_qintegral(2, x1, 2);
  long psize = p.size();
  CHECK(g1 == g * RatQ(PolyQ(1), PolyQ::pochhammer(psize + 1, 2)));
  CHECK(series_expand(g1, 25) == gf_truncated(build_PnmX(2, 2, x1), 25));

  // coverage condition: nothing spans the pair (1, 2)
  CHECK_THROWS_AS(gf_via_qintegral(2, {{Partition{}, 1, 1}, {Partition{}, 1, 2}}, 0),
                  std::invalid_argument);
}

TEST_CASE("chain extension of the maximum") {
  CHECK(verify_plus_extension_gf(build_chain(2), 25));
  CHECK(verify_plus_extension_gf(build_antichain(2), 25));
  CHECK(verify_plus_extension_gf(build_young(Partition{2, 1}), 25));
  // explicit form for the antichain: 1/((1-q)^2 (1-q^3))
  TruncSeries lhs = gf_truncated(op_plus(build_antichain(2)), 25);
  RatQ rhs(PolyQ(1), PolyQ::one_minus_q(1).pow(2) * PolyQ::one_minus_q(3));
  CHECK(lhs == series_expand(rhs, 25));
}

TEST_CASE("two-tail decomposition identity") {
  Poset c2 = build_chain(2);
  CHECK(verify_two_tail_decomposition(c2, 0, 1, 1, 25));
  CHECK(verify_two_tail_decomposition(c2, 0, 0, 2, 25));  // empty upper chain apart from y0
  Poset y21 = build_young(Partition{2, 1});
  for (int y2 : y21.lower_covers(y21.unique_maximal()))
    CHECK(verify_two_tail_decomposition(y21, y2, 1, 2, 25));
}

TEST_CASE("slant sums preserve the hook length match") {
  Poset base = build_young(Partition{2, 2});
  int x = -1;
  for (int v = 0; v < base.size(); ++v)
    if (is_acyclic_element(base, v)) x = v;
  REQUIRE(x >= 0);
  Poset glued = slant_sum(base, x, build_young(Partition{2, 1}));
  CHECK(is_d_complete(glued).ok);
  CHECK(check_hlf(glued, 30, "slant-sum").match);
  Poset chained = slant_sum(base, x, build_chain(3));
  CHECK(check_hlf(chained, 30, "slant-chain").match);
}
