#include "qhook/partition.hpp"

#include <sstream>
#include <stdexcept>

namespace qhook {

static void check_weakly_decreasing(const std::vector<int>& p) {
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0) throw std::invalid_argument("Partition: negative part");
    if (i > 0 && p[i] > p[i - 1]) throw std::invalid_argument("Partition: parts must weakly decrease");
  }
}

Partition::Partition(std::initializer_list<int> p) : parts(p) { check_weakly_decreasing(parts); }

Partition::Partition(std::vector<int> p) : parts(std::move(p)) { check_weakly_decreasing(parts); }

Partition Partition::staircase(int n) {
  std::vector<int> p;
  for (int i = n - 1; i >= 0; --i) p.push_back(i);
  return Partition(std::move(p));
}

int Partition::part(int i) const {
  if (i < 1) throw std::invalid_argument("Partition::part: 1-based index");
  if (i > declared_length()) return 0;
  return parts[static_cast<size_t>(i - 1)];
}

int Partition::length() const {
  int n = 0;
  for (int x : parts)
    if (x > 0) ++n;
  return n;
}

long Partition::sum() const {
  long s = 0;
  for (int x : parts) s += x;
  return s;
}

bool Partition::is_strict() const {
  for (size_t i = 1; i < parts.size(); ++i)
    if (parts[i] > 0 && parts[i] == parts[i - 1]) return false;
  return true;
}

Partition Partition::padded(int len) const {
  if (length() > len) throw std::invalid_argument("Partition::padded: too many nonzero parts");
  std::vector<int> p(parts.begin(), parts.begin() + std::min<size_t>(parts.size(), static_cast<size_t>(len)));
  p.resize(static_cast<size_t>(len), 0);
  return Partition(std::move(p));
}

Partition Partition::normalized() const {
  std::vector<int> p(parts);
  while (!p.empty() && p.back() == 0) p.pop_back();
  Partition r;
  r.parts = std::move(p);
  return r;
}

bool Partition::operator==(const Partition& o) const {
  return normalized().parts == o.normalized().parts;
}

bool Partition::operator<(const Partition& o) const {
  return normalized().parts < o.normalized().parts;
}

std::string Partition::str() const {
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ",";
    os << parts[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> p;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("Partition::parse: empty part in '" + text + "'");
    p.push_back(std::stoi(tok));
  }
  return Partition(std::move(p));
}

Partition operator+(const Partition& a, const Partition& b) {
  size_t n = std::max(a.parts.size(), b.parts.size());
  std::vector<int> p(n, 0);
  for (size_t i = 0; i < n; ++i) p[i] = a.part(static_cast<int>(i) + 1) + b.part(static_cast<int>(i) + 1);
  return Partition(std::move(p));
}

Partition alternant_expansion_partition(const Partition& mu, int n, int ell) {
  if (ell < 1 || ell > n) throw std::invalid_argument("alternant_expansion_partition: bad index");
  std::vector<int> p;
  p.reserve(static_cast<size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) p.push_back(i < ell ? mu.part(i) + 1 : mu.part(i + 1));
  return Partition(std::move(p));
}

std::vector<Partition> partitions_in_box(int n, int max_part) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // Depth-first, largest first at each slot: deterministic enumeration.
  auto rec = [&](auto&& self, int slot, int bound) -> void {
    if (slot == n) {
      out.push_back(Partition(std::vector<int>(cur)));
      return;
    }
    for (int v = bound; v >= 0; --v) {
      cur.push_back(v);
      self(self, slot + 1, v);
      cur.pop_back();
    }
  };
  rec(rec, 0, max_part);
  return out;
}

}  // namespace qhook
