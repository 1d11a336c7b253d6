#pragma once

#include <map>
#include <string>
#include <vector>

#include "qhook/partition.hpp"
#include "qhook/ratq.hpp"

namespace qhook {

using ExpVec = std::vector<int>;

/// Graded lexicographic order on exponent vectors of equal length.
struct GrlexLess {
  bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial in x_0..x_{nvars-1} with RatQ coefficients.
/// No zero coefficients are stored; terms are keyed in graded-lex order.
class MPoly {
 public:
  explicit MPoly(int nvars) : nvars_(nvars) {}
  static MPoly constant(int nvars, RatQ c);
  static MPoly variable(int nvars, int var);
  static MPoly monomial(int nvars, ExpVec exps, RatQ c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<ExpVec, RatQ, GrlexLess>& terms() const { return terms_; }

  void add_term(const ExpVec& exps, const RatQ& c);

  MPoly operator-() const;
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly times(const RatQ& s) const;
  MPoly pow(long k) const;
  bool operator==(const MPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  int total_degree() const;  // -1 for zero
  /// True when every coefficient is an integer constant (fast-path predicate
  /// for the integrator).
  bool has_integer_coeffs() const;

  std::string str() const;  // variables printed as x1..xn

 private:
  int nvars_;
  std::map<ExpVec, RatQ, GrlexLess> terms_;
};

/// The alternant det(x_{vars[i]}^{exps[j]}) expanded over permutations.
/// exps must be strictly decreasing (callers pass lambda+delta) and vars
/// distinct 0-based variable indices; throws std::invalid_argument otherwise.
MPoly alternant(int nvars, const std::vector<int>& exps, const std::vector<int>& vars);

/// f(q^mu): substitute x_i -> q^{mu_{i+1}}. mu must declare nvars parts.
RatQ substitute_q_powers(const MPoly& f, const Partition& mu);

}  // namespace qhook
