#include "qhook/qintegral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace qhook {

Region Region::simplex(int nvars) {
  Region r{nvars, {}};
  for (int i = 0; i < nvars; ++i) {
    Bound hi = (i + 1 < nvars) ? Bound::variable(i + 1) : Bound::one();
    r.steps.push_back(Step{i, Bound::zero(), hi});
  }
  return r;
}

RatQ integrate_monomial_simplex(const std::vector<int>& a) {
  QProduct p;
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] < 0) throw std::invalid_argument("integrate_monomial_simplex: negative exponent");
    s += a[i] + 1;
    p.times_one_minus(1).times_one_minus(s, -1);
  }
  return p.value();
}

namespace {

// Partial sums a_1+...+a_i+i; strictly increasing since a_i >= 0, so each
// monomial's denominator is squarefree in the (1-q^e) basis.
std::vector<long> partial_sums(const ExpVec& e) {
  std::vector<long> s;
  s.reserve(e.size());
  long acc = 0;
  for (int a : e) {
    if (a < 0) throw std::invalid_argument("integrate_simplex: negative exponent");
    acc += a + 1;
    s.push_back(acc);
  }
  return s;
}

/* Factored-denominator accumulation. Every monomial contributes
 *   c * (1-q)^n / prod_i (1-q^{s_i}),
 * and the s_i are distinct within one monomial. Summing over the common
 * denominator D = prod_{e in E} (1-q^e) (E = union of all partial sums) only
 * needs exact binomial divisions of D, never a general gcd until the single
 * final reduction. */
RatQ integrate_simplex_factored(const MPoly& f) {
  int n = f.nvars();
  std::map<std::vector<long>, mpz_class> groups;
  for (const auto& [e, c] : f.terms()) groups[partial_sums(e)] += c.num().coeff(0);
  std::set<long> exps;
  for (const auto& [s, c] : groups)
    for (long v : s) exps.insert(v);

  PolyQ common(1);
  for (long v : exps) common.mul_one_minus_q(v);

  PolyQ num;
  for (const auto& [s, c] : groups) {
    if (c == 0) continue;
    PolyQ t = common;
    for (long v : s) {
      bool ok = t.try_div_one_minus_q(v);
      (void)ok;  // v in exps, so the factor is present
    }
    num += t.times_scalar(c);
  }
  if (num.is_zero()) return RatQ();

  // Cancel whole binomial factors before the one generic reduction.
  long ones = n;  // numerator carries (1-q)^n
  std::vector<long> remaining;
  for (auto it = exps.rbegin(); it != exps.rend(); ++it) {
    long v = *it;
    if (v == 1 && ones > 0) {
      --ones;
      continue;
    }
    if (!num.try_div_one_minus_q(v)) remaining.push_back(v);
  }
  for (long i = 0; i < ones; ++i) num.mul_one_minus_q(1);
  PolyQ den(1);
  for (long v : remaining) den.mul_one_minus_q(v);
  return RatQ(std::move(num), std::move(den));
}

RatQ integrate_simplex_generic(const MPoly& f) {
  std::vector<RatQ> pieces;
  pieces.reserve(f.term_count());
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> a(e.begin(), e.end());
    pieces.push_back(c * integrate_monomial_simplex(a));
  }
  // Balanced reduction keeps intermediate gcds small.
  while (pieces.size() > 1) {
    std::vector<RatQ> next;
    next.reserve(pieces.size() / 2 + 1);
    for (size_t i = 0; i + 1 < pieces.size(); i += 2) next.push_back(pieces[i] + pieces[i + 1]);
    if (pieces.size() % 2) next.push_back(pieces.back());
    pieces = std::move(next);
  }
  return pieces.empty() ? RatQ() : pieces[0];
}

}  // namespace

RatQ integrate_simplex(const MPoly& f, SimplexPath path) {
  if (f.is_zero()) return RatQ();
  switch (path) {
    case SimplexPath::Factored:
      if (!f.has_integer_coeffs())
        throw std::invalid_argument("integrate_simplex: factored path needs integer coefficients");
      return integrate_simplex_factored(f);
    case SimplexPath::Generic:
      return integrate_simplex_generic(f);
    case SimplexPath::Auto:
    default:
      return f.has_integer_coeffs() ? integrate_simplex_factored(f) : integrate_simplex_generic(f);
  }
}

MPoly integrate_step(const MPoly& f, int var, Bound lo, Bound hi) {
  if (var < 0 || var >= f.nvars()) throw std::invalid_argument("integrate_step: variable out of range");
  auto check_bound = [&](const Bound& b) {
    if (b.kind == Bound::Kind::Var && (b.var < 0 || b.var >= f.nvars() || b.var == var))
      throw std::invalid_argument("integrate_step: bad bound variable");
  };
  check_bound(lo);
  check_bound(hi);

  MPoly out(f.nvars());
  for (const auto& [e, c] : f.terms()) {
    int k = e[static_cast<size_t>(var)];
    if (k < 0) throw std::invalid_argument("integrate_step: negative exponent in integration variable");
    RatQ weight = c * RatQ(PolyQ::one_minus_q(1), PolyQ::one_minus_q(k + 1));
    ExpVec base = e;
    base[static_cast<size_t>(var)] = 0;
    // hi^{k+1} - lo^{k+1}
    auto add_piece = [&](const Bound& b, bool positive) {
      if (b.kind == Bound::Kind::Zero) return;
      ExpVec t = base;
      if (b.kind == Bound::Kind::Var) t[static_cast<size_t>(b.var)] += k + 1;
      out.add_term(t, positive ? weight : -weight);
    };
    add_piece(hi, true);
    add_piece(lo, false);
  }
  return out;
}

MPoly integrate_steps(const MPoly& f, const std::vector<Step>& steps) {
  std::vector<bool> done(static_cast<size_t>(f.nvars()), false);
  MPoly g = f;
  for (const auto& st : steps) {
    if (st.var < 0 || st.var >= f.nvars()) throw std::invalid_argument("integrate_steps: variable out of range");
    if (done[static_cast<size_t>(st.var)])
      throw std::invalid_argument("integrate_steps: variable integrated twice");
    for (const Bound& b : {st.lo, st.hi})
      if (b.kind == Bound::Kind::Var && done[static_cast<size_t>(b.var)])
        throw std::invalid_argument("integrate_steps: bound references an already-integrated variable");
    g = integrate_step(g, st.var, st.lo, st.hi);
    done[static_cast<size_t>(st.var)] = true;
  }
  return g;
}

RatQ integrate_region(const MPoly& f, const Region& region) {
  if (region.nvars != f.nvars()) throw std::invalid_argument("integrate_region: nvars mismatch");
  std::vector<bool> seen(static_cast<size_t>(region.nvars), false);
  for (const auto& st : region.steps) {
    if (st.var < 0 || st.var >= region.nvars || seen[static_cast<size_t>(st.var)])
      throw std::invalid_argument("integrate_region: malformed region (unused or doubly-used variable)");
    seen[static_cast<size_t>(st.var)] = true;
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("integrate_region: malformed region (unused or doubly-used variable)");

  MPoly g = integrate_steps(f, region.steps);
  RatQ out;
  for (const auto& [e, c] : g.terms()) {
    for (int v : e)
      if (v != 0) throw std::logic_error("integrate_region: free variables remain");
    out += c;
  }
  return out;
}

namespace {

void enumerate_partitions(int slots, int bound, std::vector<int>& cur,
                          const std::function<void(const std::vector<int>&)>& fn) {
  if (slots == 0) {
    fn(cur);
    return;
  }
  for (int v = bound; v >= 0; --v) {
    cur.push_back(v);
    enumerate_partitions(slots - 1, v, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

TruncSeries partition_sum_oracle(const MPoly& f, int N) {
  int n = f.nvars();
  TruncSeries total(N);
  for (const auto& [e, c] : f.terms()) {
    for (int a : e)
      if (a < 0) throw std::invalid_argument("partition_sum_oracle: negative exponent");
    // Integer series sum_{mu} q^{|mu| + <e,mu>} for this term.
    TruncSeries s(N);
    std::vector<int> cur;
    enumerate_partitions(n, N, cur, [&](const std::vector<int>& mu) {
      long deg = 0;
      for (int i = 0; i < n; ++i) deg += static_cast<long>(mu[static_cast<size_t>(i)]) * (e[static_cast<size_t>(i)] + 1);
      if (deg <= N) s.add_coeff(static_cast<int>(deg), 1);
    });
    RatQ w = c;
    TruncSeries ws = series_expand(w, N);
    for (int i = 0; i < n; ++i) ws.mul_one_minus_q(1);
    total = total + ws * s;
  }
  return total;
}

}  // namespace qhook
