#include "qhook/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qhook {

int BitVec::count() const {
  int c = 0;
  for (uint64_t w : w_) c += __builtin_popcountll(w);
  return c;
}

bool BitVec::is_subset_of(const BitVec& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

BitVec BitVec::operator&(const BitVec& o) const {
  BitVec r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

BitVec BitVec::operator|(const BitVec& o) const {
  BitVec r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
  return r;
}

std::vector<int> BitVec::elements() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (test(i)) out.push_back(i);
  return out;
}

Poset::Poset(int n, std::vector<std::pair<int, int>> relations, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  for (auto [lo, hi] : relations) {
    if (lo < 0 || hi < 0 || lo >= n || hi >= n || lo == hi)
      throw std::invalid_argument("Poset: bad relation pair");
  }
  if (labels_.empty()) {
    labels_.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels_.push_back("e" + std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != n) throw std::invalid_argument("Poset: label count mismatch");

  std::vector<std::vector<int>> out(static_cast<size_t>(n)), in(static_cast<size_t>(n));
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (auto [lo, hi] : relations) {
    out[static_cast<size_t>(lo)].push_back(hi);
    in[static_cast<size_t>(hi)].push_back(lo);
    ++indeg[static_cast<size_t>(hi)];
  }

  // Kahn order doubles as the acyclicity check.
  std::vector<int> topo;
  topo.reserve(static_cast<size_t>(n));
  std::deque<int> ready;
  for (int v = 0; v < n; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.front();
    ready.pop_front();
    topo.push_back(v);
    for (int w : out[static_cast<size_t>(v)])
      if (--indeg[static_cast<size_t>(w)] == 0) ready.push_back(w);
  }
  if (static_cast<int>(topo.size()) != n) throw std::invalid_argument("Poset: relation has a cycle");

  down_.assign(static_cast<size_t>(n), BitVec(n));
  for (int v : topo) {
    BitVec& d = down_[static_cast<size_t>(v)];
    d.set(v);
    for (int u : in[static_cast<size_t>(v)]) d = d | down_[static_cast<size_t>(u)];
  }
  up_.assign(static_cast<size_t>(n), BitVec(n));
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (down_[static_cast<size_t>(v)].test(u)) up_[static_cast<size_t>(u)].set(v);

  // Transitive reduction: (a,b) is a cover iff the interval [a,b] is {a,b}.
  for (int b = 0; b < n; ++b)
    for (int a = 0; a < n; ++a) {
      if (a == b || !down_[static_cast<size_t>(b)].test(a)) continue;
      if ((up_[static_cast<size_t>(a)] & down_[static_cast<size_t>(b)]).count() == 2)
        covers_.emplace_back(a, b);
    }
  std::sort(covers_.begin(), covers_.end());
}

std::vector<int> Poset::upper_covers(int v) const {
  std::vector<int> out;
  for (auto [lo, hi] : covers_)
    if (lo == v) out.push_back(hi);
  return out;
}

std::vector<int> Poset::lower_covers(int v) const {
  std::vector<int> out;
  for (auto [lo, hi] : covers_)
    if (hi == v) out.push_back(lo);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (up_[static_cast<size_t>(v)].count() == 1) out.push_back(v);
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v)
    if (down_[static_cast<size_t>(v)].count() == 1) out.push_back(v);
  return out;
}

int Poset::unique_maximal() const {
  auto m = maximal_elements();
  if (m.size() != 1) throw std::domain_error("Poset: maximal element is not unique");
  return m[0];
}

BitVec Poset::interval(int a, int b) const {
  if (!leq(a, b)) return BitVec(n_);
  return up_[static_cast<size_t>(a)] & down_[static_cast<size_t>(b)];
}

std::vector<int> Poset::linear_extension() const {
  std::vector<int> indeg(static_cast<size_t>(n_), 0), out;
  for (auto [lo, hi] : covers_) ++indeg[static_cast<size_t>(hi)];
  std::set<int> ready;
  for (int v = 0; v < n_; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) ready.insert(v);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(v);
    for (auto [lo, hi] : covers_)
      if (lo == v && --indeg[static_cast<size_t>(hi)] == 0) ready.insert(hi);
  }
  return out;
}

void Poset::set_diagonal(std::vector<int> diag) {
  for (size_t i = 0; i + 1 < diag.size(); ++i)
    if (!leq(diag[i], diag[i + 1]) || diag[i] == diag[i + 1])
      throw std::invalid_argument("Poset::set_diagonal: not an ascending chain");
  diag_ = std::move(diag);
}

Poset Poset::induced(const std::vector<int>& keep) const {
  std::vector<int> newid(static_cast<size_t>(n_), -1);
  std::vector<std::string> labels;
  for (size_t i = 0; i < keep.size(); ++i) {
    newid[static_cast<size_t>(keep[i])] = static_cast<int>(i);
    labels.push_back(labels_[static_cast<size_t>(keep[i])]);
  }
  std::vector<std::pair<int, int>> rels;
  for (int a : keep)
    for (int b : keep)
      if (a != b && leq(a, b)) rels.emplace_back(newid[static_cast<size_t>(a)], newid[static_cast<size_t>(b)]);
  Poset q(static_cast<int>(keep.size()), std::move(rels), std::move(labels));
  if (!diag_.empty()) {
    std::vector<int> d;
    bool ok = true;
    for (int v : diag_) {
      if (newid[static_cast<size_t>(v)] < 0) {
        ok = false;
        break;
      }
      d.push_back(newid[static_cast<size_t>(v)]);
    }
    if (ok) q.set_diagonal(std::move(d));
  }
  return q;
}

// ---- constructions ---------------------------------------------------------

Poset build_chain(int n) {
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i + 1 < n; ++i) rels.emplace_back(i, i + 1);
  return Poset(n, std::move(rels));
}

Poset build_antichain(int n) { return Poset(n, {}); }

namespace {

struct CellDiagram {
  std::vector<std::pair<int, int>> cells;       // (row, col), row-major
  std::vector<std::pair<int, int>> cover_rels;  // (lower idx, upper idx)
  std::vector<int> diag_idx;                    // shifted diagrams: index of (r, r)
};

// Shared cell logic for Young / shifted Young diagrams. For a shifted diagram
// row r occupies columns r .. r+len-1; for a straight one 0 .. len-1.
// Order: (r,c) <= (r',c') iff r >= r' and c >= c' (weakly below and right).
CellDiagram make_diagram(const Partition& lambda, bool shifted) {
  CellDiagram d;
  int rows = lambda.length();
  std::map<std::pair<int, int>, int> id;
  for (int r = 0; r < rows; ++r) {
    int len = lambda.part(r + 1);
    int c0 = shifted ? r : 0;
    if (shifted) d.diag_idx.push_back(static_cast<int>(d.cells.size()));
    for (int c = c0; c < c0 + len; ++c) {
      id[{r, c}] = static_cast<int>(d.cells.size());
      d.cells.emplace_back(r, c);
    }
  }
  for (auto& [rc, i] : id) {
    auto [r, c] = rc;
    auto left = id.find({r, c - 1});
    if (left != id.end()) d.cover_rels.emplace_back(i, left->second);
    auto up = id.find({r - 1, c});
    if (up != id.end()) d.cover_rels.emplace_back(i, up->second);
  }
  return d;
}

std::vector<std::string> cell_labels(const CellDiagram& d, const std::string& tag) {
  std::vector<std::string> out;
  for (auto [r, c] : d.cells)
    out.push_back(tag + "(" + std::to_string(r) + "," + std::to_string(c) + ")");
  return out;
}

}  // namespace

Poset build_young(const Partition& lambda) {
  CellDiagram d = make_diagram(lambda, false);
  return Poset(static_cast<int>(d.cells.size()), d.cover_rels, cell_labels(d, "c"));
}

Poset build_shifted_young(const Partition& lambda) {
  if (!lambda.is_strict()) throw std::invalid_argument("build_shifted_young: partition must be strict");
  CellDiagram d = make_diagram(lambda, true);
  return Poset(static_cast<int>(d.cells.size()), d.cover_rels, cell_labels(d, "s"));
}

Poset disjoint_union(const Poset& a, const Poset& b) {
  std::vector<std::pair<int, int>> rels(a.covers());
  for (auto [lo, hi] : b.covers()) rels.emplace_back(lo + a.size(), hi + a.size());
  std::vector<std::string> labels;
  for (int v = 0; v < a.size(); ++v) labels.push_back("a:" + a.label(v));
  for (int v = 0; v < b.size(); ++v) labels.push_back("b:" + b.label(v));
  return Poset(a.size() + b.size(), std::move(rels), std::move(labels));
}

Poset op_plus(const Poset& p) {
  std::vector<std::pair<int, int>> rels(p.covers());
  for (int v : p.maximal_elements()) rels.emplace_back(v, p.size());
  std::vector<std::string> labels;
  for (int v = 0; v < p.size(); ++v) labels.push_back(p.label(v));
  labels.push_back("top");
  Poset q(p.size() + 1, std::move(rels), std::move(labels));
  if (p.has_diagonal()) q.set_diagonal(p.diagonal());
  return q;
}

Poset op_minus(const Poset& p) {
  int m = p.unique_maximal();
  std::vector<int> keep;
  for (int v = 0; v < p.size(); ++v)
    if (v != m) keep.push_back(v);
  return p.induced(keep);
}

Poset slant_sum(const Poset& p1, int x, const Poset& p2) {
  if (x < 0 || x >= p1.size()) throw std::invalid_argument("slant_sum: bad attachment element");
  int y = p2.unique_maximal();
  std::vector<std::pair<int, int>> rels(p1.covers());
  for (auto [lo, hi] : p2.covers()) rels.emplace_back(lo + p1.size(), hi + p1.size());
  rels.emplace_back(p1.size() + y, x);
  std::vector<std::string> labels;
  for (int v = 0; v < p1.size(); ++v) labels.push_back(p1.label(v));
  for (int v = 0; v < p2.size(); ++v) labels.push_back("s:" + p2.label(v));
  return Poset(p1.size() + p2.size(), std::move(rels), std::move(labels));
}

Poset attach_D(const Poset& p, const std::vector<int>& chain_elems, const Partition& lambda) {
  int n = static_cast<int>(chain_elems.size());
  if (n == 0) throw std::invalid_argument("attach_D: empty chain");
  std::vector<int> chain(chain_elems);
  std::sort(chain.begin(), chain.end(), [&](int a, int b) {
    if (a == b) return false;
    if (p.leq(a, b)) return true;
    if (p.leq(b, a)) return false;
    throw std::invalid_argument("attach_D: elements do not form a chain");
  });
  if (lambda.length() > n) throw std::invalid_argument("attach_D: partition longer than chain");

  CellDiagram d = make_diagram(lambda.padded(n) + Partition::staircase(n + 1), true);
  if (static_cast<int>(d.diag_idx.size()) != n) throw std::logic_error("attach_D: diagonal size mismatch");

  // Diagonal cell of row j is identified with the (n-1-j)-th chain element,
  // so the top row shares the chain's top.
  std::vector<int> cell_to_id(d.cells.size(), -1);
  std::vector<bool> is_diag(d.cells.size(), false);
  for (int j = 0; j < n; ++j) {
    cell_to_id[static_cast<size_t>(d.diag_idx[static_cast<size_t>(j)])] = chain[static_cast<size_t>(n - 1 - j)];
    is_diag[static_cast<size_t>(d.diag_idx[static_cast<size_t>(j)])] = true;
  }
  std::vector<std::string> labels;
  for (int v = 0; v < p.size(); ++v) labels.push_back(p.label(v));
  int next = p.size();
  for (size_t i = 0; i < d.cells.size(); ++i) {
    if (is_diag[i]) continue;
    cell_to_id[i] = next++;
    labels.push_back("g(" + std::to_string(d.cells[i].first) + "," + std::to_string(d.cells[i].second) + ")");
  }
  std::vector<std::pair<int, int>> rels(p.covers());
  for (auto [lo, hi] : d.cover_rels)
    rels.emplace_back(cell_to_id[static_cast<size_t>(lo)], cell_to_id[static_cast<size_t>(hi)]);
  Poset q(next, std::move(rels), std::move(labels));
  if (p.has_diagonal()) q.set_diagonal(p.diagonal());
  return q;
}

Poset build_PnX(int n, const XSet& x) {
  if (n < 1) throw std::invalid_argument("build_PnX: n must be positive");
  Poset p = build_chain(n);
  {
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    p = Poset(n, p.covers(), std::move(labels));
  }
  for (const XEntry& e : x) {
    if (e.ni < 1 || e.si < 1 || e.si + e.ni - 1 > n)
      throw std::invalid_argument("build_PnX: X entry out of range");
    if (e.lambda.length() > e.ni) throw std::invalid_argument("build_PnX: X entry partition too long");
    std::vector<int> chain;
    for (int j = e.si - 1; j <= e.si + e.ni - 2; ++j) chain.push_back(j);
    p = attach_D(p, chain, e.lambda);
  }
  std::vector<int> diag;
  for (int i = 0; i < n; ++i) diag.push_back(i);
  p.set_diagonal(std::move(diag));
  return p;
}

Poset build_PnmX(int n, int m, const XSet& x) {
  if (m < 0) throw std::invalid_argument("build_PnmX: m must be nonnegative");
  Poset p = build_PnX(n, x);
  std::vector<std::pair<int, int>> rels(p.covers());
  std::vector<std::string> labels;
  for (int v = 0; v < p.size(); ++v) labels.push_back(p.label(v));
  int prev = n - 1;  // x_n
  for (int j = 0; j < m; ++j) {
    rels.emplace_back(prev, p.size() + j);
    prev = p.size() + j;
    labels.push_back("m" + std::to_string(j + 1));
  }
  Poset q(p.size() + m, std::move(rels), std::move(labels));
  q.set_diagonal(p.diagonal());
  return q;
}

Poset build_Dmk(const Poset& p, int y2, int m, int k) {
  if (m < 0 || k < 1) throw std::invalid_argument("build_Dmk: need m >= 0, k >= 1");
  int y1 = p.unique_maximal();
  if (y2 == y1 || !p.leq(y2, y1) || p.interval(y2, y1).count() != 2)
    throw std::invalid_argument("build_Dmk: y2 must be covered by the unique maximum");
  int base = p.size();
  auto zid = [&](int j) { return base + (j + k); };  // j in [-k, m]
  int y0 = base + m + k + 1;
  std::vector<std::pair<int, int>> rels(p.covers());
  std::vector<std::string> labels;
  for (int v = 0; v < p.size(); ++v) labels.push_back(p.label(v));
  for (int j = -k; j <= m; ++j) labels.push_back("z" + std::to_string(j));
  labels.push_back("y0");
  for (int j = -k; j < m; ++j) rels.emplace_back(zid(j), zid(j + 1));
  if (m >= 1) rels.emplace_back(y0, zid(1));
  rels.emplace_back(y1, zid(0));
  rels.emplace_back(y2, zid(-1));
  rels.emplace_back(y1, y0);
  return Poset(p.size() + m + k + 2, std::move(rels), std::move(labels));
}

Poset build_Dk(const Poset& p, int y2, int k) {
  if (k < 1) throw std::invalid_argument("build_Dk: need k >= 1");
  int y1 = p.unique_maximal();
  if (y2 == y1 || !p.leq(y2, y1) || p.interval(y2, y1).count() != 2)
    throw std::invalid_argument("build_Dk: y2 must be covered by the unique maximum");
  int base = p.size();
  auto zid = [&](int j) { return base + (j + k); };  // j in [-k, 0]
  std::vector<std::pair<int, int>> rels(p.covers());
  std::vector<std::string> labels;
  for (int v = 0; v < p.size(); ++v) labels.push_back(p.label(v));
  for (int j = -k; j <= 0; ++j) labels.push_back("z" + std::to_string(j));
  for (int j = -k; j < 0; ++j) rels.emplace_back(zid(j), zid(j + 1));
  rels.emplace_back(y1, zid(0));
  rels.emplace_back(y2, zid(-1));
  return Poset(p.size() + k + 1, std::move(rels), std::move(labels));
}

// ---- queries ---------------------------------------------------------------

std::vector<BitVec> order_ideals(const Poset& p, size_t guard) {
  std::set<BitVec> seen;
  std::deque<BitVec> queue;
  BitVec empty(p.size());
  seen.insert(empty);
  queue.push_back(empty);
  while (!queue.empty()) {
    BitVec cur = queue.front();
    queue.pop_front();
    for (int v = 0; v < p.size(); ++v) {
      if (cur.test(v)) continue;
      bool addable = true;
      for (int u : p.lower_covers(v))
        if (!cur.test(u)) {
          addable = false;
          break;
        }
      if (!addable) continue;
      BitVec next = cur;
      next.set(v);
      if (seen.insert(next).second) {
        if (seen.size() > guard) throw std::runtime_error("order_ideals: ideal guard exceeded");
        queue.push_back(next);
      }
    }
  }
  std::vector<BitVec> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const BitVec& a, const BitVec& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return out;
}

namespace {

struct DiamondShape {
  int k;     // [w,z] isomorphic to the double-tailed diamond with 2k-2 elements
  int x, y;  // the incomparable pair
};

// Structural test: a set is a double-tailed diamond iff it has exactly one
// incomparable pair sitting dead center.
std::optional<DiamondShape> diamond_shape(const Poset& p, const BitVec& iv) {
  int m = iv.count();
  if (m < 4 || m % 2 != 0) return std::nullopt;
  std::vector<int> elems = iv.elements();
  int x = -1, y = -1, pairs = 0;
  for (size_t i = 0; i < elems.size() && pairs <= 1; ++i)
    for (size_t j = i + 1; j < elems.size(); ++j) {
      int a = elems[i], b = elems[j];
      if (!p.leq(a, b) && !p.leq(b, a)) {
        ++pairs;
        x = a;
        y = b;
        if (pairs > 1) break;
      }
    }
  if (pairs != 1) return std::nullopt;
  int below = 0, above = 0;
  for (int v : elems) {
    if (v == x || v == y) continue;
    if (p.leq(v, x))
      ++below;
    else
      ++above;
  }
  if (below != above || below + above + 2 != m) return std::nullopt;
  return DiamondShape{below + 2, x, y};
}

// d_k(1) minus its maximum, k >= 4: one incomparable pair, chain of k-2 below,
// chain of k-3 above.
std::optional<DiamondShape> diamond_minus_shape(const Poset& p, const BitVec& iv) {
  int m = iv.count();
  if (m < 5 || m % 2 == 0) return std::nullopt;
  std::vector<int> elems = iv.elements();
  int x = -1, y = -1, pairs = 0;
  for (size_t i = 0; i < elems.size() && pairs <= 1; ++i)
    for (size_t j = i + 1; j < elems.size(); ++j) {
      int a = elems[i], b = elems[j];
      if (!p.leq(a, b) && !p.leq(b, a)) {
        ++pairs;
        x = a;
        y = b;
        if (pairs > 1) break;
      }
    }
  if (pairs != 1) return std::nullopt;
  int below = 0, above = 0;
  for (int v : elems) {
    if (v == x || v == y) continue;
    if (p.leq(v, x))
      ++below;
    else
      ++above;
  }
  if (below != above + 1 || below + above + 2 != m) return std::nullopt;
  return DiamondShape{below + 2, x, y};
}

std::string describe(const Poset& p, const BitVec& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.elements()) {
    if (!first) out += ",";
    first = false;
    out += p.label(v);
  }
  return out + "}";
}

}  // namespace

DCompleteReport is_d_complete(const Poset& p) {
  int n = p.size();
  // All d_k^- convex sets, each paired with its minimum for condition (3).
  std::vector<std::pair<BitVec, int>> dminus;

  // k = 3: incomparable upper-cover pairs over a common bottom.
  for (int w = 0; w < n; ++w) {
    auto uc = p.upper_covers(w);
    for (size_t i = 0; i < uc.size(); ++i)
      for (size_t j = i + 1; j < uc.size(); ++j) {
        int x = uc[i], y = uc[j];
        if (p.leq(x, y) || p.leq(y, x)) continue;
        BitVec s(n);
        s.set(w);
        s.set(x);
        s.set(y);
        dminus.emplace_back(s, w);
        // Condition (1): some z covering both x and y completes a diamond.
        bool found = false;
        for (int z = 0; z < n && !found; ++z) {
          if (!p.leq(x, z) || !p.leq(y, z)) continue;
          if (p.interval(x, z).count() != 2 || p.interval(y, z).count() != 2) continue;
          BitVec iv = p.interval(w, z);
          if (iv.count() == 4 && diamond_shape(p, iv)) found = true;
        }
        if (!found)
          return {false, "condition (1): no completion above " + describe(p, s)};
      }
  }

  // k >= 4: interval-shaped d_k^- sets.
  for (int w = 0; w < n; ++w)
    for (int v = 0; v < n; ++v) {
      if (w == v || !p.leq(w, v)) continue;
      BitVec iv = p.interval(w, v);
      auto shape = diamond_minus_shape(p, iv);
      if (!shape) continue;
      dminus.emplace_back(iv, w);
      bool found = false;
      for (int z : p.upper_covers(v)) {
        BitVec full = p.interval(w, z);
        if (full.count() != iv.count() + 1) continue;
        auto ds = diamond_shape(p, full);
        if (ds && ds->k == shape->k) {
          found = true;
          break;
        }
      }
      if (!found)
        return {false, "condition (1): no completion above " + describe(p, iv)};
    }

  // Condition (2): the top of a d_k interval covers nothing outside it.
  for (int w = 0; w < n; ++w)
    for (int z = 0; z < n; ++z) {
      if (w == z || !p.leq(w, z)) continue;
      BitVec iv = p.interval(w, z);
      if (!diamond_shape(p, iv)) continue;
      for (int u : p.lower_covers(z))
        if (!iv.test(u))
          return {false, "condition (2): " + p.label(z) + " covers " + p.label(u) +
                             " outside " + describe(p, iv)};
    }

  // Condition (3): no two d_k^- convex sets differing only in the minimum.
  std::map<std::vector<int>, std::set<int>> grouped;
  for (const auto& [s, w] : dminus) {
    std::vector<int> rest;
    for (int v : s.elements())
      if (v != w) rest.push_back(v);
    grouped[rest].insert(w);
  }
  for (const auto& [rest, mins] : grouped)
    if (mins.size() > 1) {
      BitVec s(n);
      for (int v : rest) s.set(v);
      return {false, "condition (3): several minima under " + describe(p, s)};
    }
  return {true, ""};
}

HookMap hook_lengths(const Poset& p) {
  int n = p.size();
  HookMap h(static_cast<size_t>(n), 0);
  for (int z : p.linear_extension()) {
    // z lies in a neck iff it tops a double-tailed diamond interval; take the
    // smallest such interval and insist its bottom is unique.
    int best_k = -1;
    std::vector<std::pair<DiamondShape, int>> found;  // shape with its bottom w
    for (int w = 0; w < n; ++w) {
      if (w == z || !p.leq(w, z)) continue;
      auto shape = diamond_shape(p, p.interval(w, z));
      if (!shape) continue;
      if (best_k < 0 || shape->k < best_k) {
        best_k = shape->k;
        found.clear();
        found.emplace_back(*shape, w);
      } else if (shape->k == best_k) {
        found.emplace_back(*shape, w);
      }
    }
    if (found.empty()) {
      h[static_cast<size_t>(z)] = p.down_set(z).count();
    } else {
      if (found.size() != 1)
        throw std::domain_error("hook_lengths: bottom of the minimal diamond interval is not unique at " +
                                p.label(z));
      const auto& [s, w] = found[0];
      h[static_cast<size_t>(z)] =
          h[static_cast<size_t>(s.x)] + h[static_cast<size_t>(s.y)] - h[static_cast<size_t>(w)];
    }
  }
  return h;
}

std::vector<int> levels(const Poset& p) {
  if (!p.has_diagonal()) throw std::invalid_argument("levels: poset has no diagonal annotation");
  const auto& diag = p.diagonal();
  std::vector<int> counts(diag.size(), 0);
  for (int v = 0; v < p.size(); ++v) {
    for (size_t i = 0; i < diag.size(); ++i) {
      if (p.leq(v, diag[i])) {
        ++counts[i];
        break;
      }
    }
  }
  return counts;
}

bool is_acyclic_element(const Poset& p, int v) {
  // Top tree: everything above v has at most one upper cover.
  for (int u = 0; u < p.size(); ++u)
    if (p.leq(v, u) && p.upper_covers(u).size() > 1) return false;
  // And v must not top a double-tailed diamond interval (neck membership).
  for (int w = 0; w < p.size(); ++w) {
    if (w == v || !p.leq(w, v)) continue;
    if (diamond_shape(p, p.interval(w, v))) return false;
  }
  return true;
}

// ---- text format -----------------------------------------------------------

Poset parse_poset(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  std::vector<long> order;  // external ids in listing order
  std::map<long, int> to_dense;
  std::vector<std::pair<long, long>> raw_covers;
  std::vector<long> raw_diag;
  auto intern = [&](long id) {
    auto it = to_dense.find(id);
    if (it != to_dense.end()) return it->second;
    int dense = static_cast<int>(order.size());
    order.push_back(id);
    to_dense[id] = dense;
    return dense;
  };
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "elem") {
      long id;
      if (!(ls >> id)) throw std::invalid_argument("poset file: bad elem line");
      intern(id);
    } else if (kw == "cover") {
      long lo, hi;
      if (!(ls >> lo >> hi)) throw std::invalid_argument("poset file: bad cover line");
      raw_covers.emplace_back(lo, hi);
    } else if (kw == "diag") {
      long id;
      while (ls >> id) raw_diag.push_back(id);
    } else {
      throw std::invalid_argument("poset file: unknown keyword '" + kw + "'");
    }
  }
  for (auto [lo, hi] : raw_covers) {
    intern(lo);
    intern(hi);
  }
  std::vector<std::pair<int, int>> rels;
  for (auto [lo, hi] : raw_covers) rels.emplace_back(to_dense[lo], to_dense[hi]);
  std::vector<std::string> labels;
  for (long id : order) labels.push_back(std::to_string(id));
  Poset p(static_cast<int>(order.size()), std::move(rels), std::move(labels));
  if (!raw_diag.empty()) {
    std::vector<int> d;
    for (long id : raw_diag) {
      auto it = to_dense.find(id);
      if (it == to_dense.end()) throw std::invalid_argument("poset file: diag references unknown element");
      d.push_back(it->second);
    }
    p.set_diagonal(std::move(d));
  }
  return p;
}

std::string format_poset(const Poset& p) {
  std::ostringstream os;
  for (int v = 0; v < p.size(); ++v) os << "elem " << v << "\n";
  for (auto [lo, hi] : p.covers()) os << "cover " << lo << " " << hi << "\n";
  if (p.has_diagonal()) {
    os << "diag";
    for (int v : p.diagonal()) os << " " << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace qhook
