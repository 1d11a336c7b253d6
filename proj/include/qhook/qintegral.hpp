#pragma once

#include <vector>

#include "qhook/mpoly.hpp"
#include "qhook/series.hpp"

namespace qhook {

/// Integration bound: 0, 1, or another (not yet integrated) variable.
struct Bound {
  enum class Kind { Zero, One, Var } kind = Kind::Zero;
  int var = -1;
  static Bound zero() { return {Kind::Zero, -1}; }
  static Bound one() { return {Kind::One, -1}; }
  static Bound variable(int v) { return {Kind::Var, v}; }
};

/// One Jackson-integration step: integrate `var` from lo to hi.
struct Step {
  int var;
  Bound lo, hi;
};

/// Ordered chain of steps; after all steps no free variables may remain and
/// each variable is integrated exactly once.
struct Region {
  int nvars;
  std::vector<Step> steps;
  static Region simplex(int nvars);  // 0 <= x_1 <= ... <= x_n <= 1
};

/// Jackson integral of the monomial x^a over the ordered simplex:
/// prod_i (1-q) / (1-q^{a_1+...+a_i+i}).
RatQ integrate_monomial_simplex(const std::vector<int>& a);

enum class SimplexPath { Auto, Factored, Generic };

/// Exact q-integral of f over 0 <= x_1 <= ... <= x_n <= 1, summed monomial by
/// monomial. Integer-coefficient integrands take a factored-denominator fast
/// path; both paths are observationally identical.
RatQ integrate_simplex(const MPoly& f, SimplexPath path = SimplexPath::Auto);

/// Term-wise single q-integration step: int_{lo}^{hi} v^k d_q v =
/// (1-q)(hi^{k+1} - lo^{k+1})/(1-q^{k+1}); the result no longer involves var.
MPoly integrate_step(const MPoly& f, int var, Bound lo, Bound hi);

/// Apply the steps in order; variables referenced by later bounds stay free.
MPoly integrate_steps(const MPoly& f, const std::vector<Step>& steps);

/// Full region integral; the region must integrate every variable of f
/// exactly once, otherwise std::invalid_argument.
RatQ integrate_region(const MPoly& f, const Region& region);

/// (1-q)^n sum over partitions mu with at most n parts and mu_1 <= N of
/// q^{|mu|} f(q^mu), truncated at N. Requires nonnegative exponents in f so
/// terms with mu_1 > N cannot contribute below q^{N+1}.
TruncSeries partition_sum_oracle(const MPoly& f, int N);

}  // namespace qhook
