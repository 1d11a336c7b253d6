#include "qhook/gf.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace qhook {

std::string GFReport::line() const {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3f", seconds);
  std::string out = "GF " + desc + " N=" + std::to_string(order) + " ";
  out += match ? "MATCH" : ("MISMATCH@" + std::to_string(mismatch_degree));
  out += " ";
  out += buf;
  return out;
}

TruncSeries gf_truncated(const Poset& p, int N, size_t ideal_guard) {
  std::vector<BitVec> ideals = order_ideals(p, ideal_guard);  // sorted by (size, bits)
  size_t K = ideals.size();
  std::vector<int> size_of(K);
  for (size_t i = 0; i < K; ++i) size_of[i] = ideals[i].count();

  /* T[i][m] counts weakly decreasing chains of nonempty ideals contained in
   * ideals[i] with total size m (the empty chain gives T[i][0] = 1). The
   * ideals are sorted by size, so every proper subideal precedes its
   * superideal and T[j] is complete when row i consumes it; the self
   * transition only reads strictly smaller weights. */
  std::vector<std::vector<mpz_class>> T(K, std::vector<mpz_class>(static_cast<size_t>(N) + 1));
  for (size_t i = 0; i < K; ++i) {
    T[i][0] = 1;
    for (size_t j = 1; j < i; ++j) {  // j = 0 is the empty ideal
      if (size_of[j] > N || !ideals[j].is_subset_of(ideals[i])) continue;
      for (int mm = size_of[j]; mm <= N; ++mm)
        T[i][static_cast<size_t>(mm)] += T[j][static_cast<size_t>(mm - size_of[j])];
    }
    if (i >= 1 && size_of[i] <= N)
      for (int mm = size_of[i]; mm <= N; ++mm)
        T[i][static_cast<size_t>(mm)] += T[i][static_cast<size_t>(mm - size_of[i])];
  }

  TruncSeries s(N);
  for (int mm = 0; mm <= N; ++mm) s.set_coeff(mm, mpq_class(T[K - 1][static_cast<size_t>(mm)]));
  return s;
}

TruncSeries hook_product_series(const HookMap& hooks, int N) {
  TruncSeries s = TruncSeries::one(N);
  for (int h : hooks) {
    if (h < 1) throw std::invalid_argument("hook_product_series: hooks must be positive");
    s.div_one_minus_q(h);
  }
  return s;
}

GFReport check_hlf(const Poset& p, int N, const std::string& desc) {
  auto t0 = std::chrono::steady_clock::now();
  GFReport rep;
  rep.desc = desc.empty() ? ("poset" + std::to_string(p.size())) : desc;
  rep.order = N;
  TruncSeries gf = gf_truncated(p, N);
  TruncSeries hp = hook_product_series(hook_lengths(p), N);
  rep.mismatch_degree = gf.first_mismatch(hp);
  rep.match = rep.mismatch_degree < 0;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

RatQ gf_via_qintegral(int n, const XSet& x, int m) {
  for (int j = 1; j <= n - 1; ++j) {
    bool covered = false;
    for (const XEntry& e : x)
      if (e.si <= j && j + 1 <= e.si + e.ni - 1) {
        covered = true;
        break;
      }
    if (!covered)
      throw std::invalid_argument("gf_via_qintegral: diagonal pair " + std::to_string(j) +
                                  "," + std::to_string(j + 1) + " not spanned by any X entry");
  }

  Poset p = build_PnX(n, x);
  std::vector<int> lv = levels(p);
  long psize = p.size();

  MPoly integrand = MPoly::constant(n, RatQ(1));
  QProduct scalar;
  for (const XEntry& e : x) {
    Partition lam = e.lambda.padded(e.ni);
    std::vector<int> exps, vars;
    for (int j = 1; j <= e.ni; ++j) {
      exps.push_back(lam.part(j) + e.ni - j);
      vars.push_back(e.si - 1 + j - 1);
    }
    integrand = integrand * alternant(n, exps, vars);
    if (((e.ni * (e.ni - 1) / 2) % 2) != 0) scalar.negate();
    for (int j = 1; j <= e.ni; ++j) scalar.times_poch(1, lam.part(j) + e.ni - j, -1);
  }
  long level_power = 0;
  for (int i = 1; i <= n; ++i) level_power += static_cast<long>(n - i) * lv[static_cast<size_t>(i - 1)];
  scalar.times_q(-level_power);
  scalar.times_one_minus(1, -n);
  scalar.times_poch(psize + 1, m, -1);

  return integrate_simplex(integrand) * scalar.value();
}

bool verify_plus_extension_gf(const Poset& p, int N) {
  TruncSeries lhs = gf_truncated(op_plus(p), N);
  TruncSeries rhs = gf_truncated(p, N);
  rhs.div_one_minus_q(p.size() + 1);
  return lhs == rhs;
}

bool verify_two_tail_decomposition(const Poset& p, int y2, int m, int k, int N) {
  long ps = p.size();
  TruncSeries lhs = gf_truncated(build_Dmk(p, y2, m, k), N);

  QProduct head;  // q^{p+1} / (q;q)_{k-1}
  head.times_q(ps + 1).times_poch(1, k - 1, -1);
  TruncSeries rhs = series_expand(head.value(), N) * gf_truncated(op_plus(p), N);
  QProduct tail;  // 1 - q^{2p+2k+2}
  tail.times_one_minus(2 * ps + 2 * k + 2);
  rhs = rhs + series_expand(tail.value(), N) * gf_truncated(build_Dk(p, y2, k), N);
  QProduct pre;  // 1 / (q^{p+k+1}; q)_{m+2}
  pre.times_poch(ps + k + 1, m + 2, -1);
  rhs = series_expand(pre.value(), N) * rhs;
  return lhs == rhs;
}

}  // namespace qhook
