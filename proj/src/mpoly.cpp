#include "qhook/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qhook {

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

MPoly MPoly::constant(int nvars, RatQ c) {
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(ExpVec(static_cast<size_t>(nvars), 0), std::move(c));
  return p;
}

MPoly MPoly::variable(int nvars, int var) {
  if (var < 0 || var >= nvars) throw std::invalid_argument("MPoly::variable: index out of range");
  ExpVec e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(var)] = 1;
  return monomial(nvars, std::move(e), RatQ(1));
}

MPoly MPoly::monomial(int nvars, ExpVec exps, RatQ c) {
  if (static_cast<int>(exps.size()) != nvars)
    throw std::invalid_argument("MPoly::monomial: exponent vector length mismatch");
  MPoly p(nvars);
  if (!c.is_zero()) p.terms_.emplace(std::move(exps), std::move(c));
  return p;
}

void MPoly::add_term(const ExpVec& exps, const RatQ& c) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw std::invalid_argument("MPoly::add_term: exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(exps);
  if (it == terms_.end()) {
    terms_.emplace(exps, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: nvars mismatch");
  MPoly r(*this);
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const { return *this + (-o); }

MPoly MPoly::operator*(const MPoly& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("MPoly: nvars mismatch");
  MPoly r(nvars_);
  ExpVec e(static_cast<size_t>(nvars_));
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MPoly MPoly::times(const RatQ& s) const {
  MPoly r(nvars_);
  if (s.is_zero()) return r;
  for (const auto& [e, c] : terms_) {
    RatQ v = c * s;
    if (!v.is_zero()) r.terms_.emplace(e, std::move(v));
  }
  return r;
}

MPoly MPoly::pow(long k) const {
  if (k < 0) throw std::invalid_argument("MPoly::pow: negative power");
  MPoly r = constant(nvars_, RatQ(1));
  MPoly b(*this);
  while (k > 0) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k > 0) b = b * b;
  }
  return r;
}

int MPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    d = std::max(d, s);
  }
  return d;
}

bool MPoly::has_integer_coeffs() const {
  for (const auto& [e, c] : terms_)
    if (!c.is_integer_constant()) return false;
  return true;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i = 0; i < nvars_; ++i) {
      int k = e[static_cast<size_t>(i)];
      if (k == 0) continue;
      os << "*x" << (i + 1);
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

MPoly alternant(int nvars, const std::vector<int>& exps, const std::vector<int>& vars) {
  size_t n = exps.size();
  if (vars.size() != n) throw std::invalid_argument("alternant: exps/vars length mismatch");
  for (size_t i = 0; i + 1 < n; ++i)
    if (exps[i] <= exps[i + 1])
      throw std::invalid_argument("alternant: exponents must be strictly decreasing");
  for (size_t i = 0; i < n; ++i) {
    if (exps[i] < 0) throw std::invalid_argument("alternant: negative exponent");
    if (vars[i] < 0 || vars[i] >= nvars) throw std::invalid_argument("alternant: variable out of range");
    for (size_t j = i + 1; j < n; ++j)
      if (vars[i] == vars[j]) throw std::invalid_argument("alternant: repeated variable");
  }
  // Leibniz expansion; n <= 7 everywhere this runs, so n! terms are fine.
  MPoly r(nvars);
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    int inversions = 0;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    ExpVec e(static_cast<size_t>(nvars), 0);
    for (size_t i = 0; i < n; ++i) e[static_cast<size_t>(vars[i])] += exps[perm[i]];
    r.add_term(e, RatQ(inversions % 2 == 0 ? 1 : -1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

RatQ substitute_q_powers(const MPoly& f, const Partition& mu) {
  if (mu.declared_length() != f.nvars())
    throw std::invalid_argument("substitute_q_powers: partition length must equal nvars");
  RatQ acc;
  for (const auto& [e, c] : f.terms()) {
    long deg = 0;
    for (int i = 0; i < f.nvars(); ++i)
      deg += static_cast<long>(e[static_cast<size_t>(i)]) * mu.part(i + 1);
    acc += c * RatQ::q_power(deg);
  }
  return acc;
}

}  // namespace qhook
