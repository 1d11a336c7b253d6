// Acceptance suite: runs the full verification matrix and prints one
// PASS/FAIL line per criterion. Exits nonzero if anything fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "qhook/classes.hpp"
#include "qhook/gf.hpp"
#include "qhook/runner.hpp"

using namespace qhook;

namespace {

int g_failures = 0;

void criterion(int index, const std::string& name, const std::function<bool(std::string&)>& body) {
  auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!ok) ++g_failures;
  std::printf("[%d/8] %-34s %s (%.1fs)%s%s\n", index, name.c_str(), ok ? "PASS" : "FAIL", secs,
              detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

bool verify_sweep(const std::vector<ClassInstance>& instances, std::string& detail,
                  std::map<std::string, double>* max_secs = nullptr) {
  for (const ClassInstance& inst : instances) {
    VerifyReport rep = verify_class(inst);
    if (max_secs) {
      double& slot = (*max_secs)[class_id_str(inst.id)];
      slot = std::max(slot, rep.seconds);
    }
    if (!rep.pass) {
      detail = "first failure: " + rep.line(false);
      return false;
    }
  }
  detail = std::to_string(instances.size()) + " instances";
  return true;
}

std::vector<ClassInstance> instances_for(ClassId id, int max_part, int mmax) {
  SweepConfig cfg;
  cfg.max_part = max_part;
  cfg.mmax = mmax;
  std::vector<ClassInstance> out;
  for (const ClassInstance& inst : default_sweep(cfg))
    if (inst.id == id) out.push_back(inst);
  return out;
}

// ---- criterion 1: fixed-diagonal classes ------------------------------------

bool criterion1(std::string& detail) {
  std::vector<ClassInstance> all;
  for (ClassId id : {ClassId::C3, ClassId::C5, ClassId::C6, ClassId::C7, ClassId::C8a,
                     ClassId::C8b, ClassId::C8c, ClassId::C9a, ClassId::C9b, ClassId::C13,
                     ClassId::C14, ClassId::C15}) {
    auto part = instances_for(id, 2, 2);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::map<std::string, double> max_secs;
  if (!verify_sweep(all, detail, &max_secs)) return false;
  std::ostringstream os;
  os << all.size() << " instances; slowest per class:";
  for (const char* id : {"3", "5", "6"}) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), " %s=%.2fs", id, max_secs[id]);
    os << buf;
  }
  detail = os.str();
  // the under-a-second figure for birds/tailed insets/banners is a target,
  // not a gate; report it but only fail on correctness
  return true;
}

// ---- criterion 2: reformulated classes --------------------------------------

bool criterion2(std::string& detail) {
  size_t count = 0;
  for (const Partition& mu : partitions_in_box(5, 3)) {
    auto [l8, r8] = swivel4_identity_sides(mu);
    if (l8 != r8) {
      detail = "swivel-4 identity fails at mu=" + mu.str();
      return false;
    }
    auto [l10, r10] = tagged_swivel_identity_sides(mu);
    if (l10 != r10) {
      detail = "tagged-swivel identity fails at mu=" + mu.str();
      return false;
    }
    count += 2;
  }
  if (pump_inner_integral() != pump_inner_closed_form()) {
    detail = "pump inner integral does not match the displayed factorization";
    return false;
  }
  for (const Partition& lam : partitions_in_box(3, 2)) {
    ClassInstance inst;
    inst.id = ClassId::C12;
    inst.lambda = lam;
    if (!verify_class(inst).pass) {
      detail = "pump class fails at lambda=" + lam.str();
      return false;
    }
    ++count;
  }
  detail = std::to_string(count) + " identities + inner-integral term match";
  return true;
}

// ---- criterion 3: arbitrary-diagonal classes at desk scale -------------------

bool criterion3(std::string& detail) {
  std::vector<ClassInstance> all;
  for (int n = 1; n <= 3; ++n)
    for (const Partition& lam : partitions_in_box(n, 2))
      for (const Partition& mu : partitions_in_box(n, 2)) {
        ClassInstance c;
        c.id = ClassId::C1;
        c.n = n;
        c.lambda = lam;
        c.mu = mu;
        all.push_back(c);
      }
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 2; ++k)
      for (const Partition& mu : partitions_in_box(n, 2)) {
        ClassInstance c;
        c.id = ClassId::C2;
        c.n = n;
        c.k = k;
        c.mu = mu;
        all.push_back(c);
      }
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= 2; ++k)
      for (const Partition& lam : partitions_in_box(n - 1, 2))
        for (const Partition& mu : partitions_in_box(n + 1, 2)) {
          ClassInstance c;
          c.id = ClassId::C4;
          c.n = n;
          c.k = k;
          c.lambda = lam;
          c.mu = mu;
          all.push_back(c);
        }
  for (int n = 3; n <= 4; ++n)
    for (int k = 1; k <= 2; ++k)
      for (int eps = 0; eps <= 1; ++eps)
        for (const Partition& lam : partitions_in_box(n, 2)) {
          ClassInstance c;
          c.id = ClassId::C11;
          c.n = n;
          c.k = k;
          c.eps = eps;
          c.lambda = lam;
          all.push_back(c);
        }
  return verify_sweep(all, detail);
}

// ---- criterion 4: end-to-end hook length formula -----------------------------

bool criterion4(std::string& detail) {
  const int N = 30;
  for (ClassId id : all_class_ids()) {
    ClassInstance inst = canonical_instance(id);
    ClassSpec spec = class_spec(inst);
    Poset p = build_PnmX(spec.n, spec.m, spec.x);
    if (p.size() > 31) {
      detail = "class " + class_id_str(id) + " instance too large (" + std::to_string(p.size()) + ")";
      return false;
    }
    if (!is_d_complete(p).ok) {
      detail = "class " + class_id_str(id) + " instance is not d-complete";
      return false;
    }
    TruncSeries gf = gf_truncated(p, N);
    TruncSeries hp = hook_product_series(hook_lengths(p), N);
    if (gf != hp) {
      detail = "class " + class_id_str(id) + ": combinatorial GF != hook product";
      return false;
    }
    RatQ closed = gf_via_qintegral(spec.n, spec.x, spec.m);
    if (series_expand(closed, N) != gf) {
      detail = "class " + class_id_str(id) + ": q-integral GF != combinatorial GF";
      return false;
    }
  }
  detail = "19 poset instances, three pipelines agree at N=30";
  return true;
}

// ---- criterion 5: classical sanity -------------------------------------------

long count_linear_extensions(const Poset& p, BitVec done) {
  if (done.count() == p.size()) return 1;
  long total = 0;
  for (int v = 0; v < p.size(); ++v) {
    if (done.test(v)) continue;
    bool minimal = true;
    for (int u : p.lower_covers(v))
      if (!done.test(u)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    BitVec next = done;
    next.set(v);
    total += count_linear_extensions(p, next);
  }
  return total;
}

bool criterion5(std::string& detail) {
  Poset y431 = build_young(Partition{4, 3, 1});
  HookMap h = hook_lengths(y431);
  long prod = 1;
  for (int v : h) prod *= v;
  if (prod != 576) {
    detail = "hook product of the (4,3,1) shape is " + std::to_string(prod);
    return false;
  }
  long ext = count_linear_extensions(y431, BitVec(y431.size()));
  if (ext != 70 || 40320 / prod != ext) {
    detail = "tableau count mismatch: " + std::to_string(ext);
    return false;
  }

  // straight-shape hook product identity
  size_t checked = 0;
  for (const Partition& lam : partitions_in_box(4, 4)) {
    if (lam.sum() == 0) continue;
    int n = 4;
    QProduct rhs;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) rhs.times_one_minus(lam.part(i) - lam.part(j) + j - i);
    for (int i = 1; i <= n; ++i) rhs.times_poch(1, lam.part(i) + n - i, -1);
    PolyQ hook_den(1);
    for (int v : hook_lengths(build_young(lam))) hook_den.mul_one_minus_q(v);
    if (RatQ(PolyQ(1), hook_den) != rhs.value()) {
      detail = "shape hook identity fails at lambda=" + lam.str();
      return false;
    }
    ++checked;
  }
  // shifted-shape hook product identity
  for (int n = 1; n <= 4; ++n) {
    for (const Partition& lam : partitions_in_box(n, 3)) {
      Partition shifted = lam.padded(n) + Partition::staircase(n + 1);
      QProduct rhs;
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) rhs.times_one_minus(lam.part(i) - lam.part(j) + j - i);
      for (int i = 1; i <= n; ++i) rhs.times_poch(1, lam.part(i) + n - i, -1);
      for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j)
          rhs.times_one_minus(2L * n + 1 - i - j + lam.part(i) + lam.part(j + 1), -1);
      PolyQ hook_den(1);
      for (int v : hook_lengths(build_shifted_young(shifted))) hook_den.mul_one_minus_q(v);
      if (RatQ(PolyQ(1), hook_den) != rhs.value()) {
        detail = "shifted hook identity fails at lambda=" + lam.str() + " n=" + std::to_string(n);
        return false;
      }
      ++checked;
    }
  }
  detail = "tableau count 70 + " + std::to_string(checked) + " hook product identities";
  return true;
}

// ---- criterion 6: lemma suite -------------------------------------------------

bool criterion6(std::string& detail) {
  // q-integral vs partition-sum oracle on a spanning monomial set
  const int N = 25;
  size_t checks = 0;
  for (int n = 1; n <= 3; ++n) {
    ExpVec e(static_cast<size_t>(n), 0);
    std::vector<ExpVec> monos;
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == n) {
        monos.push_back(e);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[static_cast<size_t>(pos)] = v;
        self(self, pos + 1, left - v);
      }
      e[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, 6);
    for (const ExpVec& m : monos) {
      MPoly f = MPoly::monomial(n, m, RatQ(1));
      if (series_expand(integrate_simplex(f), N) != partition_sum_oracle(f, N)) {
        detail = "oracle equivalence fails on a monomial";
        return false;
      }
      ++checks;
    }
  }

  // chain-extension lemmas on the small-poset pool
  std::vector<Poset> pool;
  for (int n = 1; n <= 8; ++n) pool.push_back(build_chain(n));
  for (const Partition& lam : partitions_in_box(8, 3))
    if (lam.sum() >= 1 && lam.sum() <= 8) pool.push_back(build_young(lam));
  std::vector<Poset> extensions;
  for (const Poset& p : pool)
    for (int y2 : p.lower_covers(p.unique_maximal()))
      for (int m = 0; m <= 2; ++m)
        for (int k = 1; k <= 2; ++k)
          if (p.size() + m + k + 2 <= 8) extensions.push_back(build_Dmk(p, y2, m, k));
  std::vector<Poset> everything(pool);
  everything.insert(everything.end(), extensions.begin(), extensions.end());

  for (const Poset& p : everything) {
    if (p.size() > 8) continue;
    if (!verify_plus_extension_gf(p, N)) {
      detail = "chain-extension lemma fails on a pool poset";
      return false;
    }
    ++checks;
  }
  for (const Poset& p : everything) {
    if (p.size() > 8) continue;
    if (p.maximal_elements().size() != 1) continue;
    for (int y2 : p.lower_covers(p.unique_maximal()))
      for (int m = 0; m <= 2; ++m)
        for (int k = 1; k <= 2; ++k) {
          if (!verify_two_tail_decomposition(p, y2, m, k, N)) {
            detail = "two-tail decomposition fails on a pool poset";
            return false;
          }
          ++checks;
        }
  }

  // homogeneity lemma on monomials
  for (int n = 2; n <= 4; ++n) {
    ExpVec e(static_cast<size_t>(n - 1), 0);
    std::vector<ExpVec> monos;
    auto rec = [&](auto&& self, int pos, int left) -> void {
      if (pos == n - 1) {
        monos.push_back(e);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        e[static_cast<size_t>(pos)] = v;
        self(self, pos + 1, left - v);
      }
      e[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, 5);
    for (const ExpVec& m : monos) {
      int d = std::accumulate(m.begin(), m.end(), 0);
      for (int k = 0; k <= 3; ++k) {
        ExpVec big(m);
        big.push_back(k);
        RatQ lhs = integrate_simplex(MPoly::monomial(n, big, RatQ(1)));
        RatQ rhs = RatQ(PolyQ::one_minus_q(1), PolyQ::one_minus_q(n + k + d)) *
                   integrate_simplex(MPoly::monomial(n - 1, m, RatQ(1)));
        if (lhs != rhs) {
          detail = "homogeneity lemma fails";
          return false;
        }
        ++checks;
      }
    }
  }

  // alternant expansion lemma on alternant integrands
  for (int n = 2; n <= 4; ++n)
    for (const Partition& mu : partitions_in_box(n, 2))
      for (int k = 0; k <= 2; ++k) {
        Partition mup = mu.padded(n);
        std::vector<int> exps, vars;
        for (int j = 1; j <= n; ++j) {
          exps.push_back(mup.part(j) + n - j);
          vars.push_back(j - 1);
        }
        ExpVec fm(static_cast<size_t>(n), 0);
        fm[0] = 1;  // f = x_1, homogeneous of degree 1
        ExpVec xk(static_cast<size_t>(n), 0);
        xk[static_cast<size_t>(n - 1)] = k;
        RatQ lhs = integrate_simplex(MPoly::monomial(n, fm, RatQ(1)) *
                                     MPoly::monomial(n, xk, RatQ(1)) * alternant(n, exps, vars));
        RatQ sum;
        for (int ell = 1; ell <= n; ++ell) {
          Partition hat = alternant_expansion_partition(mup, n, ell);
          std::vector<int> he, hv;
          for (int j = 1; j <= n - 1; ++j) {
            he.push_back(hat.part(j) + n - 1 - j);
            hv.push_back(j - 1);
          }
          ExpVec fs(static_cast<size_t>(n - 1), 0);
          fs[0] = 1;
          RatQ inner = integrate_simplex(MPoly::monomial(n - 1, fs, RatQ(1)) * alternant(n - 1, he, hv));
          sum += ((n - ell) % 2 == 0 ? inner : -inner);
        }
        RatQ rhs = RatQ(PolyQ::one_minus_q(1),
                        PolyQ::one_minus_q(mup.sum() + static_cast<long>(n + 1) * n / 2 + k + 1)) *
                   sum;
        if (lhs != rhs) {
          detail = "alternant expansion lemma fails";
          return false;
        }
        ++checks;
      }

  detail = std::to_string(checks) + " lemma instances";
  return true;
}

// ---- criterion 7: partial fraction identities ---------------------------------

bool criterion7(std::string& detail) {
  for (int n = 1; n <= 4; ++n)
    if (!verify_partial_fraction(PfId::AltIdentity, n, 3)) {
      detail = "alt_identity fails at n=" + std::to_string(n);
      return false;
    }
  for (int n = 1; n <= 5; ++n)
    for (PfId id : {PfId::AId, PfId::PfExp1, PfId::PfExp2})
      if (!verify_partial_fraction(id, n)) {
        detail = pf_id_str(id) + " fails at n=" + std::to_string(n);
        return false;
      }
  for (int n = 1; n <= 4; ++n)
    if (!verify_partial_fraction(PfId::WwPfe, n)) {
      detail = "ww_pfe fails at n=" + std::to_string(n);
      return false;
    }
  detail = "alt_identity n<=4 (parts<=3), a_id/pfexp1/pfexp2 n<=5, ww_pfe n<=4";
  return true;
}

// ---- criterion 8: determinism --------------------------------------------------

bool criterion8(std::string& detail) {
  SweepConfig cfg;
  cfg.jobs = 4;
  RunResult a = run_verify_all(cfg);
  RunResult b = run_verify_all(cfg);
  if (a.report_text() != b.report_text()) {
    detail = "consecutive runs differ";
    return false;
  }
  cfg.jobs = 1;
  SweepConfig small = cfg;
  small.nmax = 3;
  RunResult c = run_verify_all(small);
  RunResult d = run_verify_all(small);
  if (c.report_text() != d.report_text()) {
    detail = "single-threaded runs differ";
    return false;
  }
  if (!a.all_pass) {
    detail = "default sweep has failures";
    return false;
  }
  detail = std::to_string(a.reports.size()) + "-instance report byte-identical across runs";
  return true;
}

}  // namespace

int main() {
  criterion(1, "fixed-diagonal class identities", criterion1);
  criterion(2, "reformulated classes (8d, 10, 12)", criterion2);
  criterion(3, "arbitrary-diagonal classes", criterion3);
  criterion(4, "end-to-end hook length formula", criterion4);
  criterion(5, "classical hook sanity", criterion5);
  criterion(6, "lemma suite", criterion6);
  criterion(7, "partial fraction identities", criterion7);
  criterion(8, "deterministic reports", criterion8);
  if (g_failures == 0) {
    std::printf("ACCEPTANCE: ALL PASS\n");
    return 0;
  }
  std::printf("ACCEPTANCE: %d FAILURE(S)\n", g_failures);
  return 1;
}
