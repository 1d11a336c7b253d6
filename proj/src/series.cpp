#include "qhook/series.hpp"

#include <sstream>
#include <stdexcept>

namespace qhook {

TruncSeries::TruncSeries(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
  c_.assign(static_cast<size_t>(order) + 1, mpq_class(0));
}

TruncSeries TruncSeries::one(int order) {
  TruncSeries s(order);
  s.c_[0] = 1;
  return s;
}

static void require_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("TruncSeries: mismatched truncation orders");
}

TruncSeries TruncSeries::operator+(const TruncSeries& o) const {
  require_same_order(*this, o);
  TruncSeries r(*this);
  for (int k = 0; k <= order_; ++k) r.c_[static_cast<size_t>(k)] += o.c_[static_cast<size_t>(k)];
  return r;
}

TruncSeries TruncSeries::operator-(const TruncSeries& o) const {
  require_same_order(*this, o);
  TruncSeries r(*this);
  for (int k = 0; k <= order_; ++k) r.c_[static_cast<size_t>(k)] -= o.c_[static_cast<size_t>(k)];
  return r;
}

TruncSeries TruncSeries::operator*(const TruncSeries& o) const {
  require_same_order(*this, o);
  TruncSeries r(order_);
  for (int i = 0; i <= order_; ++i) {
    if (c_[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; i + j <= order_; ++j) {
      if (o.c_[static_cast<size_t>(j)] == 0) continue;
      r.c_[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
    }
  }
  return r;
}

TruncSeries TruncSeries::times(const mpq_class& s) const {
  TruncSeries r(*this);
  for (auto& x : r.c_) x *= s;
  return r;
}

void TruncSeries::mul_one_minus_q(long e) {
  if (e <= 0) throw std::invalid_argument("TruncSeries::mul_one_minus_q: exponent must be >= 1");
  for (int k = order_; k >= static_cast<int>(e); --k)
    c_[static_cast<size_t>(k)] -= c_[static_cast<size_t>(k - e)];
}

void TruncSeries::div_one_minus_q(long e) {
  if (e <= 0) throw std::invalid_argument("TruncSeries::div_one_minus_q: exponent must be >= 1");
  for (int k = static_cast<int>(e); k <= order_; ++k)
    c_[static_cast<size_t>(k)] += c_[static_cast<size_t>(k - e)];
}

TruncSeries TruncSeries::truncated(int new_order) const {
  if (new_order > order_) throw std::invalid_argument("TruncSeries::truncated: cannot extend");
  TruncSeries r(new_order);
  for (int k = 0; k <= new_order; ++k) r.c_[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)];
  return r;
}

int TruncSeries::first_mismatch(const TruncSeries& o) const {
  int n = std::min(order_, o.order_);
  for (int k = 0; k <= n; ++k)
    if (c_[static_cast<size_t>(k)] != o.c_[static_cast<size_t>(k)]) return k;
  return -1;
}

std::string TruncSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= order_; ++k) {
    const mpq_class& a = c_[static_cast<size_t>(k)];
    if (a == 0) continue;
    mpq_class b = a;
    if (first) {
      if (b < 0) {
        os << "-";
        b = -b;
      }
      first = false;
    } else {
      os << (b < 0 ? " - " : " + ");
      if (b < 0) b = -b;
    }
    if (k == 0) {
      os << b.get_str();
    } else {
      if (b != 1) os << b.get_str() << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  os << " + O(" << var << "^" << (order_ + 1) << ")";
  return os.str();
}

TruncSeries series_expand(const RatQ& r, int N) {
  const PolyQ& den = r.den();
  if (den.coeff(0) == 0)
    throw std::domain_error("series_expand: denominator has zero constant term");
  TruncSeries s(N);
  const mpz_class& d0 = den.coeff(0);
  // b_k = (n_k - sum_{i=1..k} d_i b_{k-i}) / d0
  for (int k = 0; k <= N; ++k) {
    mpq_class acc(r.num().coeff(k));
    int top = std::min(k, den.degree());
    for (int i = 1; i <= top; ++i) acc -= mpq_class(den.coeff(i)) * s.coeff(k - i);
    acc /= mpq_class(d0);
    acc.canonicalize();
    s.set_coeff(k, acc);
  }
  return s;
}

}  // namespace qhook
