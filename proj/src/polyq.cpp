#include "qhook/polyq.hpp"

#include <sstream>
#include <stdexcept>

namespace qhook {

namespace {
const mpz_class kZero = 0;
}

PolyQ::PolyQ(long c) {
  if (c != 0) c_.push_back(mpz_class(c));
}

PolyQ::PolyQ(const mpz_class& c) {
  if (c != 0) c_.push_back(c);
}

PolyQ::PolyQ(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

void PolyQ::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyQ PolyQ::q_power(long e) {
  if (e < 0) throw std::invalid_argument("PolyQ::q_power: negative exponent");
  PolyQ p;
  p.c_.assign(static_cast<size_t>(e) + 1, mpz_class(0));
  p.c_.back() = 1;
  return p;
}

PolyQ PolyQ::one_minus_q(long e) {
  if (e < 0) throw std::invalid_argument("PolyQ::one_minus_q: negative exponent");
  if (e == 0) return PolyQ();  // 1 - q^0 = 0
  PolyQ p;
  p.c_.assign(static_cast<size_t>(e) + 1, mpz_class(0));
  p.c_.front() = 1;
  p.c_.back() = -1;
  return p;
}

PolyQ PolyQ::pochhammer(long s, long n, long step) {
  if (n < 0) throw std::invalid_argument("PolyQ::pochhammer: negative length");
  PolyQ p(1);
  for (long i = 0; i < n; ++i) {
    long e = s + i * step;
    if (e == 0) return PolyQ();
    p.mul_one_minus_q(e);
  }
  return p;
}

int PolyQ::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return -1;
}

const mpz_class& PolyQ::coeff(int d) const {
  if (d < 0 || d >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(d)];
}

const mpz_class& PolyQ::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

const mpz_class& PolyQ::trailing() const {
  int v = valuation();
  return v < 0 ? kZero : c_[static_cast<size_t>(v)];
}

PolyQ PolyQ::operator-() const {
  PolyQ r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

PolyQ& PolyQ::operator+=(const PolyQ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

PolyQ& PolyQ::operator-=(const PolyQ& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpz_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

PolyQ PolyQ::operator+(const PolyQ& o) const {
  PolyQ r(*this);
  r += o;
  return r;
}

PolyQ PolyQ::operator-(const PolyQ& o) const {
  PolyQ r(*this);
  r -= o;
  return r;
}

PolyQ PolyQ::operator*(const PolyQ& o) const {
  if (is_zero() || o.is_zero()) return PolyQ();
  PolyQ r;
  r.c_.assign(c_.size() + o.c_.size() - 1, mpz_class(0));
  mpz_class tmp;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j] == 0) continue;
      tmp = c_[i] * o.c_[j];
      r.c_[i + j] += tmp;
    }
  }
  r.trim();
  return r;
}

PolyQ& PolyQ::operator*=(const PolyQ& o) {
  *this = *this * o;
  return *this;
}

PolyQ PolyQ::times_scalar(const mpz_class& s) const {
  if (s == 0) return PolyQ();
  PolyQ r(*this);
  for (auto& x : r.c_) x *= s;
  return r;
}

PolyQ PolyQ::shifted(long e) const {
  if (is_zero() || e == 0) return *this;
  if (e < 0) throw std::invalid_argument("PolyQ::shifted: negative shift");
  PolyQ r;
  r.c_.assign(c_.size() + static_cast<size_t>(e), mpz_class(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i + static_cast<size_t>(e)] = c_[i];
  return r;
}

PolyQ PolyQ::pow(long k) const {
  if (k < 0) throw std::invalid_argument("PolyQ::pow: negative power");
  PolyQ r(1), b(*this);
  while (k > 0) {
    if (k & 1) r *= b;
    k >>= 1;
    if (k > 0) b *= b;
  }
  return r;
}

void PolyQ::mul_one_minus_q(long e) {
  if (e <= 0) throw std::invalid_argument("PolyQ::mul_one_minus_q: exponent must be >= 1");
  if (is_zero()) return;
  size_t n = c_.size();
  c_.resize(n + static_cast<size_t>(e), mpz_class(0));
  // (1 - q^e) * p: subtract the shifted copy, highest degree first.
  for (size_t i = n; i-- > 0;) c_[i + static_cast<size_t>(e)] -= c_[i];
  trim();
}

bool PolyQ::try_div_one_minus_q(long e) {
  if (e <= 0) throw std::invalid_argument("PolyQ::try_div_one_minus_q: exponent must be >= 1");
  if (is_zero()) return true;
  int dp = degree();
  if (dp < e) return false;
  // p = h - q^e h  =>  h_k = p_k + h_{k-e}; exact iff h vanishes above dp - e.
  std::vector<mpz_class> h(static_cast<size_t>(dp) + 1, mpz_class(0));
  for (int k = 0; k <= dp; ++k) {
    h[static_cast<size_t>(k)] = coeff(k);
    if (k >= e) h[static_cast<size_t>(k)] += h[static_cast<size_t>(k - e)];
  }
  for (int k = dp - static_cast<int>(e) + 1; k <= dp; ++k)
    if (h[static_cast<size_t>(k)] != 0) return false;
  h.resize(static_cast<size_t>(dp - e) + 1);
  c_ = std::move(h);
  trim();
  return true;
}

PolyQ PolyQ::divexact(const PolyQ& o) const {
  if (o.is_zero()) throw std::domain_error("PolyQ::divexact: division by zero");
  if (is_zero()) return PolyQ();
  int dr = degree(), dd = o.degree();
  if (dr < dd) throw std::domain_error("PolyQ::divexact: not divisible");
  std::vector<mpz_class> rem(c_);
  std::vector<mpz_class> quo(static_cast<size_t>(dr - dd) + 1, mpz_class(0));
  const mpz_class& lead = o.c_.back();
  mpz_class qc, r;
  for (int k = dr - dd; k >= 0; --k) {
    mpz_class& top = rem[static_cast<size_t>(k + dd)];
    if (top == 0) continue;
    mpz_fdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    if (r != 0) throw std::domain_error("PolyQ::divexact: not divisible");
    quo[static_cast<size_t>(k)] = qc;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= qc * o.c_[static_cast<size_t>(j)];
  }
  for (const auto& x : rem)
    if (x != 0) throw std::domain_error("PolyQ::divexact: not divisible");
  return PolyQ(std::move(quo));
}

mpz_class PolyQ::content() const {
  mpz_class g = 0;
  for (const auto& x : c_) {
    if (x == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

PolyQ PolyQ::primitive_part() const {
  if (is_zero()) return PolyQ();
  mpz_class c = content();
  if (c == 1) return *this;
  PolyQ r(*this);
  for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return r;
}

PolyQ PolyQ::canonical() const {
  if (is_zero()) return PolyQ();
  PolyQ r = primitive_part();
  if (r.trailing() < 0)
    for (auto& x : r.c_) x = -x;
  return r;
}

namespace {

// Pseudo-remainder of a by b (degree(a) >= degree(b) not required).
PolyQ pseudo_rem(PolyQ a, const PolyQ& b) {
  int db = b.degree();
  const mpz_class lead_b = b.leading();
  while (!a.is_zero() && a.degree() >= db) {
    int shift = a.degree() - db;
    mpz_class lead_a = a.leading();
    a = a.times_scalar(lead_b) - b.shifted(shift).times_scalar(lead_a);
  }
  return a;
}

}  // namespace

PolyQ PolyQ::gcd(const PolyQ& a, const PolyQ& b) {
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  // Primitive PRS: pseudo-divide, strip content each step.
  PolyQ f = a.primitive_part(), g = b.primitive_part();
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    PolyQ r = pseudo_rem(f, g).primitive_part();
    f = std::move(g);
    g = std::move(r);
  }
  return f.canonical();
}

std::string PolyQ::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    mpz_class a = c_[i];
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace qhook
