#include <functional>
#include <stdexcept>
#include <vector>

#include "qhook/classes.hpp"

/* Partial-fraction identity verifiers.
 *
 * Strategy: after clearing denominators each identity is a polynomial with a
 * known per-variable degree, so exact agreement on an integer grid with more
 * values per variable than that degree proves it. The grids use pairwise
 * disjoint positive values, which keeps every denominator nonzero. The
 * variable t is never gridded: both cleared sides are compared as polynomials
 * in t with exact rational coefficients, which settles that direction
 * coefficient-wise.
 */

namespace qhook {

std::optional<PfId> pf_id_parse(const std::string& s) {
  if (s == "alt_identity") return PfId::AltIdentity;
  if (s == "a_id") return PfId::AId;
  if (s == "pfexp1") return PfId::PfExp1;
  if (s == "pfexp2") return PfId::PfExp2;
  if (s == "ww_pfe") return PfId::WwPfe;
  return std::nullopt;
}

std::string pf_id_str(PfId id) {
  switch (id) {
    case PfId::AltIdentity: return "alt_identity";
    case PfId::AId: return "a_id";
    case PfId::PfExp1: return "pfexp1";
    case PfId::PfExp2: return "pfexp2";
    case PfId::WwPfe: return "ww_pfe";
  }
  return "?";
}

namespace {

// Dense polynomial in t over Q, just big enough for the cleared identities.
struct TPoly {
  std::vector<mpq_class> c;
  explicit TPoly(const mpq_class& c0 = 0) : c{c0} {}
  static TPoly linear(const mpq_class& c0, const mpq_class& c1) {
    TPoly p;
    p.c = {c0, c1};
    return p;
  }
  // *this *= (c0 + c1 t)
  void mul_linear(const mpq_class& c0, const mpq_class& c1) {
    c.push_back(0);
    for (size_t i = c.size(); i-- > 1;) c[i] = c[i] * c0 + c[i - 1] * c1;
    c[0] *= c0;
  }
  void add_scaled(const TPoly& o, const mpq_class& s) {
    if (c.size() < o.c.size()) c.resize(o.c.size(), 0);
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i] * s;
  }
  bool operator==(const TPoly& o) const {
    size_t n = std::max(c.size(), o.c.size());
    for (size_t i = 0; i < n; ++i) {
      mpq_class a = i < c.size() ? c[i] : mpq_class(0);
      mpq_class b = i < o.c.size() ? o.c[i] : mpq_class(0);
      if (a != b) return false;
    }
    return true;
  }
};

// q^e (1 - q^e) as an exact rational function of q, any integer e.
RatQ qpow_one_minus(long e) { return RatQ::q_power(e) * RatQ::one_minus_q_power(e); }

// The alternant-expansion identity: an exact statement in q for each mu.
bool check_alt_identity(int n, int max_part) {
  for (const Partition& mu : partitions_in_box(n, max_part)) {
    long s = mu.sum();
    long half = static_cast<long>(n) * (n + 1) / 2;
    RatQ lhs = qpow_one_minus(s + half);
    RatQ rhs;
    for (int ell = 1; ell <= n; ++ell) {
      RatQ term = qpow_one_minus(n + 1 - ell + mu.part(ell));
      for (int i = 1; i <= n; ++i) {
        if (i == ell) continue;
        term *= RatQ::one_minus_q_power(2L * n + 2 - ell - i + mu.part(i) + mu.part(ell));
        term /= RatQ::one_minus_q_power(mu.part(ell) - mu.part(i) + i - ell);
      }
      rhs += term;
    }
    if (lhs != rhs) return false;
  }
  return true;
}

// Odometer over a tensor grid. Returns false as soon as fn does.
bool for_each_point(const std::vector<int>& sizes,
                    const std::function<bool(const std::vector<int>&)>& fn) {
  std::vector<int> idx(sizes.size(), 0);
  for (;;) {
    if (!fn(idx)) return false;
    size_t v = 0;
    while (v < sizes.size()) {
      if (++idx[v] < sizes[v]) break;
      idx[v] = 0;
      ++v;
    }
    if (v == sizes.size()) return true;
  }
}

long grid_value(int var, int step, int nvars, int offset) {
  return 2 + offset + var + static_cast<long>(nvars) * step;
}

bool check_a_id(int n, int offset) {
  // Cleared form has per-variable degree <= n+1.
  std::vector<int> sizes(static_cast<size_t>(n), n + 2);
  return for_each_point(sizes, [&](const std::vector<int>& idx) {
    std::vector<mpq_class> a(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
      a[static_cast<size_t>(v)] = grid_value(v, idx[static_cast<size_t>(v)], n, offset);
    mpq_class prod = 1;
    for (const auto& x : a) prod *= x;
    mpq_class lhs = prod * (1 - prod);
    mpq_class rhs = 0;
    for (int ell = 0; ell < n; ++ell) {
      mpq_class term = a[static_cast<size_t>(ell)] * (1 - a[static_cast<size_t>(ell)]);
      for (int i = 0; i < n; ++i) {
        if (i == ell) continue;
        mpq_class den = 1 - a[static_cast<size_t>(ell)] / a[static_cast<size_t>(i)];
        if (den == 0) throw std::runtime_error("pole");
        term *= (1 - a[static_cast<size_t>(i)] * a[static_cast<size_t>(ell)]) / den;
      }
      rhs += term;
    }
    return lhs == rhs;
  });
}

bool check_pfexp1(int n, int offset) {
  /* Both sides times D = prod_i (1 - t x_i):
   *   LHS*D = prod_i (1 - t x_i y_i)
   *   RHS*D = (prod y_i) D + sum_l (1-y_l) [D/(1-t x_l)] prod_{i!=l} ...
   * Per-variable degree: x_i <= n; y_i <= 1, so the y grid is {0,1}. */
  std::vector<int> sizes;
  for (int i = 0; i < n; ++i) sizes.push_back(n + 1);  // x_i
  for (int i = 0; i < n; ++i) sizes.push_back(2);      // y_i in {0,1}
  return for_each_point(sizes, [&](const std::vector<int>& idx) {
    std::vector<mpq_class> x(static_cast<size_t>(n));
    std::vector<int> y(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      x[static_cast<size_t>(v)] = grid_value(v, idx[static_cast<size_t>(v)], n, offset);
      y[static_cast<size_t>(v)] = idx[static_cast<size_t>(n + v)];
    }
    TPoly lhs(mpq_class(1));
    int yprod = 1;
    for (int i = 0; i < n; ++i) {
      lhs.mul_linear(1, -x[static_cast<size_t>(i)] * y[static_cast<size_t>(i)]);
      yprod *= y[static_cast<size_t>(i)];
    }
    TPoly rhs(mpq_class(0));
    if (yprod != 0) {
      TPoly d(mpq_class(1));
      for (int i = 0; i < n; ++i) d.mul_linear(1, -x[static_cast<size_t>(i)]);
      rhs.add_scaled(d, yprod);
    }
    for (int ell = 0; ell < n; ++ell) {
      if (y[static_cast<size_t>(ell)] == 1) continue;  // (1 - y_l) = 0
      mpq_class fac = 1 - y[static_cast<size_t>(ell)];
      for (int i = 0; i < n; ++i) {
        if (i == ell) continue;
        mpq_class den = 1 - x[static_cast<size_t>(i)] / x[static_cast<size_t>(ell)];
        if (den == 0) throw std::runtime_error("pole");
        fac *= (1 - x[static_cast<size_t>(i)] * y[static_cast<size_t>(i)] / x[static_cast<size_t>(ell)]) / den;
      }
      TPoly part(mpq_class(1));
      for (int i = 0; i < n; ++i)
        if (i != ell) part.mul_linear(1, -x[static_cast<size_t>(i)]);
      rhs.add_scaled(part, fac);
    }
    return lhs == rhs;
  });
}

bool check_pfexp2(int n, int offset) {
  /* Both sides times D = prod_i (1 - t a_i):
   *   LHS*D = D - prod_i a_i (a_i - t)
   *   RHS*D = sum_l (1-a_l^2) [D/(1-t a_l)] prod_{i!=l} (1-a_i a_l)/(1-a_l/a_i)
   * Per-variable degree in each a_i is <= n+1. */
  std::vector<int> sizes(static_cast<size_t>(n), n + 2);
  return for_each_point(sizes, [&](const std::vector<int>& idx) {
    std::vector<mpq_class> a(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v)
      a[static_cast<size_t>(v)] = grid_value(v, idx[static_cast<size_t>(v)], n, offset);
    TPoly lhs(mpq_class(1));
    for (int i = 0; i < n; ++i) lhs.mul_linear(1, -a[static_cast<size_t>(i)]);
    TPoly sub(mpq_class(1));
    for (int i = 0; i < n; ++i)
      sub.mul_linear(a[static_cast<size_t>(i)] * a[static_cast<size_t>(i)], -a[static_cast<size_t>(i)]);
    lhs.add_scaled(sub, -1);
    TPoly rhs(mpq_class(0));
    for (int ell = 0; ell < n; ++ell) {
      const mpq_class& al = a[static_cast<size_t>(ell)];
      mpq_class fac = 1 - al * al;
      for (int i = 0; i < n; ++i) {
        if (i == ell) continue;
        mpq_class den = 1 - al / a[static_cast<size_t>(i)];
        if (den == 0) throw std::runtime_error("pole");
        fac *= (1 - a[static_cast<size_t>(i)] * al) / den;
      }
      TPoly part(mpq_class(1));
      for (int i = 0; i < n; ++i)
        if (i != ell) part.mul_linear(1, -a[static_cast<size_t>(i)]);
      rhs.add_scaled(part, fac);
    }
    return lhs == rhs;
  });
}

bool check_ww_pfe(int n, int offset) {
  /* Constraint b_1..b_{n+1} = a_1..a_n t eliminates b_{n+1} = A t / B, making
   * (1 - b_{n+1}/t) = (B-A)/B and (1 - a_l/b_{n+1}) = (A t - a_l B)/(A t).
   * Both sides times D = A B prod_j (t - a_j):
   *   LHS*D = A (B-A) prod_j (t - b_j)
   *   RHS*D = sum_l prod_j (b_j - a_l) (A t - a_l B) [prod_{j!=l}(t-a_j)] / F_l,
   * with F_l = prod_{j!=l} (a_j - a_l)/a_j a pure rational constant. */
  std::vector<int> sizes;
  for (int i = 0; i < n; ++i) sizes.push_back(n + 2);  // a_j, degree <= n+1
  for (int i = 0; i < n; ++i) sizes.push_back(3);      // b_j, degree <= 2
  return for_each_point(sizes, [&](const std::vector<int>& idx) {
    std::vector<mpq_class> a(static_cast<size_t>(n)), b(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
      a[static_cast<size_t>(v)] = grid_value(v, idx[static_cast<size_t>(v)], 2 * n, offset);
      b[static_cast<size_t>(v)] = grid_value(n + v, idx[static_cast<size_t>(n + v)], 2 * n, offset);
    }
    mpq_class A = 1, B = 1;
    for (int i = 0; i < n; ++i) {
      A *= a[static_cast<size_t>(i)];
      B *= b[static_cast<size_t>(i)];
    }
    TPoly lhs(mpq_class(1));
    for (int j = 0; j < n; ++j) lhs.mul_linear(-b[static_cast<size_t>(j)], 1);
    TPoly scaled(mpq_class(0));
    scaled.add_scaled(lhs, A * (B - A));
    lhs = scaled;
    TPoly rhs(mpq_class(0));
    for (int ell = 0; ell < n; ++ell) {
      const mpq_class& al = a[static_cast<size_t>(ell)];
      mpq_class fac = 1;
      for (int j = 0; j < n; ++j) fac *= b[static_cast<size_t>(j)] - al;
      for (int j = 0; j < n; ++j) {
        if (j == ell) continue;
        mpq_class d = (a[static_cast<size_t>(j)] - al) / a[static_cast<size_t>(j)];
        if (d == 0) throw std::runtime_error("pole");
        fac /= d;
      }
      TPoly part = TPoly::linear(-al * B, A);  // A t - a_l B
      for (int j = 0; j < n; ++j)
        if (j != ell) part.mul_linear(-a[static_cast<size_t>(j)], 1);
      rhs.add_scaled(part, fac);
    }
    return lhs == rhs;
  });
}

}  // namespace

bool verify_partial_fraction(PfId id, int n, int max_part) {
  if (n < 1) throw std::invalid_argument("verify_partial_fraction: n must be positive");
  if (id == PfId::AltIdentity) return check_alt_identity(n, max_part);
  for (int offset = 0; offset < 3; ++offset) {
    try {
      switch (id) {
        case PfId::AId: return check_a_id(n, offset * 101);
        case PfId::PfExp1: return check_pfexp1(n, offset * 101);
        case PfId::PfExp2: return check_pfexp2(n, offset * 101);
        case PfId::WwPfe: return check_ww_pfe(n, offset * 101);
        default: break;
      }
    } catch (const std::runtime_error&) {
      continue;  // pole hit; move the grid and retry
    }
  }
  throw std::runtime_error("verify_partial_fraction: no pole-free grid found");
}

}  // namespace qhook
