#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "qhook/poset.hpp"

using namespace qhook;

namespace {

// Brute-force count of linear extensions by peeling minimal elements.
long count_linear_extensions(const Poset& p, BitVec done) {
  if (done.count() == p.size()) return 1;
  long total = 0;
  for (int v = 0; v < p.size(); ++v) {
    if (done.test(v)) continue;
    bool minimal = true;
    for (int u : p.lower_covers(v))
      if (!done.test(u)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    BitVec next = done;
    next.set(v);
    total += count_linear_extensions(p, next);
  }
  return total;
}

long hook_product(const HookMap& h) {
  long prod = 1;
  for (int v : h) prod *= v;
  return prod;
}

}  // namespace

TEST_CASE("basic builders") {
  CHECK(build_young(Partition{1}).size() == 1);
  CHECK(build_young(Partition{1}).covers().empty());

  Poset y21 = build_young(Partition{2, 1});
  CHECK(y21.size() == 3);
  auto maxes = y21.maximal_elements();
  REQUIRE(maxes.size() == 1);
  auto lows = y21.lower_covers(maxes[0]);
  REQUIRE(lows.size() == 2);
  CHECK_FALSE(y21.leq(lows[0], lows[1]));
  CHECK_FALSE(y21.leq(lows[1], lows[0]));

  Poset c3 = build_chain(3);
  CHECK(c3.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  CHECK_THROWS_AS(build_shifted_young(Partition{2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("gluing a shifted shape onto a chain") {
  // |result| = |P| + |(lambda+delta_{n+1})*| - n
  Poset c1 = build_chain(1);
  Poset glued = attach_D(c1, {0}, Partition{0});
  CHECK(glued.size() == 1 + build_shifted_young(Partition{0} + Partition::staircase(2)).size() - 1);

  Poset c3 = build_chain(3);
  Partition lam{2, 1, 0};
  Poset big = attach_D(c3, {0, 1, 2}, lam);
  CHECK(big.size() ==
        3 + build_shifted_young(lam + Partition::staircase(4)).size() - 3);

  Poset anti = build_antichain(2);
  CHECK_THROWS_AS(attach_D(anti, {0, 1}, Partition{0, 0}), std::invalid_argument);
}

TEST_CASE("level census") {
  // the worked example with levels (6, 11, 9)
  XSet X = {{Partition{1}, 1, 1},
            {Partition{4, 2}, 2, 1},
            {Partition{5, 4, 2}, 3, 1},
            {Partition{}, 2, 2}};
  Poset p = build_PnX(3, X);
  CHECK(levels(p) == std::vector<int>{6, 11, 9});
  CHECK(p.size() == 26);

  Poset chainlike = build_PnX(4, {});
  CHECK(levels(chainlike) == std::vector<int>{1, 1, 1, 1});

  CHECK(build_PnmX(2, 1, {{Partition{}, 2, 1}}).size() == 4);
  CHECK_THROWS_AS(levels(build_chain(3)), std::invalid_argument);

  // shapes-class levels: l_i = lambda_{n+1-i} + mu_{n+1-i} + 2i - 1
  Partition lam{2, 1, 0}, mu{2, 2, 1};
  Poset shapes = build_PnX(3, {{lam, 3, 1}, {mu, 3, 1}});
  std::vector<int> lv = levels(shapes);
  for (int i = 1; i <= 3; ++i)
    CHECK(lv[static_cast<size_t>(i - 1)] == lam.part(4 - i) + mu.part(4 - i) + 2 * i - 1);
  // |P_n^m(X)| = m + sum of levels
  Poset with_chain = build_PnmX(3, 2, {{lam, 3, 1}, {mu, 3, 1}});
  CHECK(with_chain.size() == 2 + std::accumulate(lv.begin(), lv.end(), 0));
}

TEST_CASE("plus and minus") {
  Poset y21 = build_young(Partition{2, 1});
  Poset back = op_minus(op_plus(y21));
  CHECK(back.size() == y21.size());
  CHECK(back.covers() == y21.covers());
  CHECK_THROWS_AS(op_minus(build_antichain(2)), std::domain_error);
}

TEST_CASE("double-tailed chain extension") {
  Poset c2 = build_chain(2);
  for (int m = 0; m <= 2; ++m)
    for (int k = 1; k <= 2; ++k)
      CHECK(build_Dmk(c2, 0, m, k).size() == c2.size() + m + k + 2);
  CHECK(build_Dk(c2, 0, 2).size() == c2.size() + 3);
  CHECK_THROWS_AS(build_Dmk(c2, 1, 1, 1), std::invalid_argument);  // y2 must be covered by max
}

TEST_CASE("order ideal enumeration") {
  CHECK(order_ideals(build_chain(4)).size() == 5);
  CHECK(order_ideals(build_antichain(2)).size() == 4);
  CHECK(order_ideals(build_young(Partition{2, 1})).size() == 5);
  CHECK_THROWS_AS(order_ideals(build_antichain(25), 100), std::runtime_error);
}

TEST_CASE("d-completeness") {
  for (const Partition& lam : partitions_in_box(3, 3))
    if (lam.sum() > 0) CHECK(is_d_complete(build_young(lam)).ok);
  CHECK(is_d_complete(build_chain(5)).ok);
  CHECK(is_d_complete(build_shifted_young(Partition{6, 4, 1})).ok);

  Poset vee(3, {{0, 1}, {0, 2}});
  auto rep = is_d_complete(vee);
  CHECK_FALSE(rep.ok);
  CHECK(rep.witness.find("condition (1)") != std::string::npos);
}

TEST_CASE("hook lengths") {
  CHECK(hook_lengths(build_chain(4)) == HookMap{1, 2, 3, 4});
  CHECK(hook_lengths(build_young(Partition{2, 1})) == HookMap{3, 1, 1});
  // the top cell of the 2x2 square is a neck: h = 2 + 2 - 1
  CHECK(hook_lengths(build_young(Partition{2, 2})) == HookMap{3, 2, 2, 1});

  Poset y431 = build_young(Partition{4, 3, 1});
  HookMap h = hook_lengths(y431);
  CHECK(hook_product(h) == 576);
  long ext = count_linear_extensions(y431, BitVec(y431.size()));
  CHECK(ext == 70);  // 8! / 576
  long fact = 1;
  for (int i = 2; i <= 8; ++i) fact *= i;
  CHECK(fact / hook_product(h) == ext);
}

TEST_CASE("acyclic elements") {
  // in a chain every element is acyclic; in a square the top is not
  Poset c3 = build_chain(3);
  for (int v = 0; v < 3; ++v) CHECK(is_acyclic_element(c3, v));
  Poset y22 = build_young(Partition{2, 2});
  int top = y22.unique_maximal();
  CHECK_FALSE(is_acyclic_element(y22, top));
}

TEST_CASE("poset text format") {
  Poset y21 = build_young(Partition{2, 1});
  Poset round = parse_poset(format_poset(y21));
  CHECK(round.size() == y21.size());
  CHECK(round.covers() == y21.covers());

  Poset with_diag = parse_poset("elem 0\nelem 1\ncover 0 1\ndiag 0 1\n# comment\n");
  CHECK(with_diag.diagonal() == std::vector<int>{0, 1});
  CHECK_THROWS_AS(parse_poset("cover 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset("elem 0\ndiag 5\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poset("frob 1 2\n"), std::invalid_argument);
}
