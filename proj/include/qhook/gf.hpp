#pragma once

#include <string>

#include "qhook/poset.hpp"
#include "qhook/qintegral.hpp"
#include "qhook/series.hpp"

namespace qhook {

/// Outcome of a truncated hook-length-formula comparison.
struct GFReport {
  std::string desc;
  int order = 0;
  bool match = false;
  int mismatch_degree = -1;  // first differing degree when !match
  double seconds = 0.0;
  /// Machine-readable line: `GF <desc> N=<n> MATCH|MISMATCH@<deg> <seconds>`.
  std::string line() const;
};

/// Exact coefficients of q^0..q^N of the P-partition generating function,
/// computed by the order-ideal multichain DP (a P-partition is a weakly
/// decreasing chain of nonempty order ideals).
TruncSeries gf_truncated(const Poset& p, int N, size_t ideal_guard = 1000000);

/// Truncation of prod_u 1/(1 - q^{h(u)}).
TruncSeries hook_product_series(const HookMap& hooks, int N);

/// gf_truncated vs hook_product_series(hook_lengths(p)).
GFReport check_hlf(const Poset& p, int N, const std::string& desc = "");

/// GF(P_n^m(X)) as an exact rational function: the q-integral of the glued
/// alternant product, normalized by the level powers, the (1-q)^n factor and
/// the chain prefactor (q^{|P_n(X)|+1}; q)_m. Requires every consecutive
/// diagonal pair to be spanned by some X entry; throws otherwise.
RatQ gf_via_qintegral(int n, const XSet& x, int m);

/// GF(P with a new global maximum) == GF(P) / (1 - q^{p+1}), truncated at N.
bool verify_plus_extension_gf(const Poset& p, int N);

/// The chain-extension decomposition of GF(D_{m,k}(P)): checks
/// GF(D_{m,k}(P)) == ( q^{p+1}/(q;q)_{k-1} GF(P^+)
///                    + (1-q^{2p+2k+2}) GF(D_k(P)) ) / (q^{p+k+1};q)_{m+2}
/// at truncation N, all generating functions computed combinatorially.
bool verify_two_tail_decomposition(const Poset& p, int y2, int m, int k, int N);

}  // namespace qhook
