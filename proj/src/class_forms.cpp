#include <stdexcept>

#include "qhook/classes.hpp"

namespace qhook {

namespace {

long binom2(long n) { return n * (n - 1) / 2; }
long binom3(long n) { return n * (n - 1) * (n - 2) / 6; }

RatQ rhs_class1(int n, const Partition& lam, const Partition& mu) {
  long ql = binom2(n) + 2 * binom3(n);
  for (int i = 1; i <= n - 1; ++i) ql += static_cast<long>(i) * (lam.part(i + 1) + mu.part(i + 1));
  QProduct p;
  p.times_q(ql).times_one_minus(1, n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
      p.times_one_minus(mu.part(i) - mu.part(j) + j - i);
    }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      p.times_one_minus(lam.part(i) + mu.part(j) + 2L * n - i - j + 1, -1);
  return p.value();
}

RatQ rhs_class2(int n, const Partition& mu, long k) {
  long s = mu.sum();
  long ql = binom3(n + 1);
  for (int i = 1; i <= n; ++i) ql += static_cast<long>(i - 1) * mu.part(i);
  QProduct p;
  p.times_q(ql).times_one_minus(1, n);
  p.times_one_minus(s + binom2(n + 1));  // |mu| + C(n+1,2)
  p.times_one_minus(s + binom2(n + 1) + k, -1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) p.times_one_minus(mu.part(i) - mu.part(j) + j - i);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j)
      p.times_one_minus(2L * n + 1 - i - j + mu.part(i) + mu.part(j + 1), -1);
  return p.value();
}

RatQ rhs_class3(const Partition& lam, const Partition& mu, long m) {
  long sl = lam.sum(), sm = mu.sum();
  QProduct p;
  p.times_q(lam.part(2) + mu.part(2) + m + 1).times_one_minus(1, 2);
  p.times_one_minus(sl + sm + 2 * m + 4);
  p.times_one_minus(lam.part(1) - lam.part(2) + 1);
  p.times_one_minus(mu.part(1) - mu.part(2) + 1);
  p.times_one_minus(sl + sm + m + 4, -1);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) p.times_one_minus(lam.part(i) + mu.part(j) + m + 5 - i - j, -1);
  return p.value();
}

RatQ rhs_class4(int n, const Partition& lam, const Partition& mu, long k) {
  long sl = lam.sum(), sm = mu.sum();
  long ql = static_cast<long>(n) * (n - 1) * (2 * n + 5) / 6 + 1 + k;
  for (int i = 1; i <= n; ++i)
    ql += static_cast<long>(i + 1) * lam.part(i) + static_cast<long>(i) * mu.part(i + 1);
  QProduct p;
  p.negate().times_q(ql).times_one_minus(1, n + 1);
  for (int i = 1; i <= n + 1; ++i)
    p.times_one_minus(sl + sm - mu.part(i) + static_cast<long>(n) * (n - 1) + k + i, -1);
  for (int j = 1; j <= n - 1; ++j)
    p.times_one_minus(sl + sm + lam.part(j) + static_cast<long>(n) * n + n - j + k + 1);
  p.times_one_minus(sl + sm + static_cast<long>(n) * n + k + 2, -1);
  for (int i = 1; i <= n + 1; ++i)
    for (int j = i + 1; j <= n + 1; ++j) p.times_one_minus(mu.part(i) - mu.part(j) + j - i);
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 1; j <= n - 1; ++j) p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n - 1; ++j)
      p.times_one_minus(mu.part(i) + lam.part(j) + 2L * n - i - j + 1, -1);
  return p.value();
}

RatQ rhs_class5(const Partition& lam, const Partition& mu) {
  long sl = lam.sum(), sm = mu.sum();
  long ql = 7;
  for (int i = 1; i <= 2; ++i) ql += static_cast<long>(i) * (lam.part(i) + mu.part(i + 1));
  QProduct p;
  p.negate().times_q(ql).times_one_minus(1, 4);
  p.times_one_minus(lam.part(1) - lam.part(2) + 1);
  p.times_one_minus(sl + sm + lam.part(1) + 10);
  p.times_one_minus(sl + sm + lam.part(2) + 9);
  p.times_one_minus(sl + sm + 9, -1);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) p.times_one_minus(mu.part(i) - mu.part(j) + j - i);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 3; ++j) p.times_one_minus(lam.part(i) + mu.part(j) + 7 - i - j, -1);
  for (int i = 1; i <= 3; ++i) p.times_one_minus(sl + sm - mu.part(i) + 4 + i, -1);
  return p.value();
}

RatQ rhs_class6(const Partition& mu, long m) {
  long sm = mu.sum();
  long ql = 2 * m + 10;
  for (int i = 1; i <= 3; ++i) ql += static_cast<long>(i) * mu.part(i + 1);
  QProduct p;
  p.times_q(ql).times_one_minus(1, 4);
  for (int i = 1; i <= 4; ++i) p.times_one_minus(mu.part(i) + 5 - i, -1);
  p.times_one_minus(sm + 2 * m + 10);
  p.times_one_minus(sm + m + 10, -1);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      p.times_one_minus(mu.part(i) - mu.part(j) + j - i);
      p.times_one_minus(mu.part(i) + mu.part(j) + m + 10 - i - j, -1);
    }
  return p.value();
}

RatQ rhs_class7(const Partition& lam, const Partition& mu) {
  long sl = lam.sum(), sm = mu.sum();
  long ql = mu.part(2) + 13;
  for (int i = 1; i <= 3; ++i) ql += static_cast<long>(i) * lam.part(i);
  QProduct p;
  p.times_q(ql).times_one_minus(1, 6);
  p.times_one_minus(mu.part(1) + 2);
  p.times_one_minus(mu.part(2) + 1);
  p.times_one_minus(mu.part(1) - mu.part(2) + 1);
  p.times_poch(sl + sm + 10, 3, -1);
  for (int i = 1; i <= 3; ++i) {
    p.times_one_minus(sl + sm + lam.part(i) + 15 - i);
    p.times_poch(lam.part(i) + 4 - i, 2, -1);
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 2; ++j)
      p.times_one_minus(sl + sm - lam.part(i) - mu.part(j) + 3 + i + j, -1);
  return p.value();
}

RatQ rhs_class8a(const Partition& lam) {
  long sl = lam.sum();
  long ql = 19;
  for (int i = 1; i <= 3; ++i) ql += static_cast<long>(i) * lam.part(i);
  QProduct p;
  p.times_q(ql).times_one_minus(1, 9).times_one_plus(1);
  p.times_poch(sl + 10, 2, -1);
  p.times_one_minus(sl + 14, -1);
  for (int i = 1; i <= 3; ++i) {
    p.times_one_minus(sl + lam.part(i) + 17 - i);
    p.times_poch(lam.part(i) + 6 - i, 2, -1);
    p.times_poch(sl - lam.part(i) + 5 + i, 2, -1);
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
  return p.value();
}

RatQ rhs_class8b(const Partition& lam) {
  long sl = lam.sum();
  long ql = 29;
  for (int i = 1; i <= 4; ++i) ql += static_cast<long>(i) * lam.part(i);
  QProduct p;
  p.times_q(ql).times_one_minus(1, 11).times_one_plus(1, 2);
  p.times_poch(sl + 15, 2, -1, 2);  // (q^{|l|+15}; q^2)_2
  p.times_one_minus(sl + 18, -1);
  for (int i = 1; i <= 4; ++i) {
    p.times_one_minus(sl + lam.part(i) + 22 - i);
    p.times_poch(lam.part(i) + 5 - i, 2, -1, 2);
    p.times_one_minus(sl - lam.part(i) + 9 + i, -1);
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
      p.times_one_minus(lam.part(i) + lam.part(j) + 13 - i - j, -1);
    }
  return p.value();
}

RatQ rhs_class8c(const Partition& lam) {
  long sl = lam.sum();
  long ql = 33;
  for (int i = 1; i <= 4; ++i) ql += static_cast<long>(i) * lam.part(i);
  QProduct p;
  p.times_q(ql).times_one_minus(1, 11).times_one_plus(1);
  p.times_poch(sl + 16, 2, -1);
  p.times_one_minus(sl + 19, -1);
  for (int i = 1; i <= 4; ++i) {
    p.times_one_minus(sl + lam.part(i) + 23 - i);
    p.times_poch(lam.part(i) + 6 - i, 2, -1);
    p.times_one_minus(sl - lam.part(i) + 9 + i, -1);
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
      p.times_one_minus(lam.part(i) + lam.part(j) + 14 - i - j, -1);
    }
  return p.value();
}

RatQ rhs_class8d_direct(const Partition& lam) {
  long sl = lam.sum();
  long ql = 48;
  for (int i = 1; i <= 5; ++i) ql += static_cast<long>(i) * lam.part(i);
  QProduct p;
  p.times_q(ql).times_one_minus(1, 14).times_one_plus(1, 2);
  p.times_poch(sl + 21, 4, -1);
  for (int i = 1; i <= 5; ++i) {
    p.times_one_minus(sl + lam.part(i) + 29 - i);
    p.times_poch(lam.part(i) + 6 - i, 3, -1);
  }
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
      p.times_one_minus(sl - lam.part(i) - lam.part(j) + i + j + 7, -1);
    }
  return p.value();
}

RatQ rhs_class9a(const Partition& lam) {
  long sl = lam.sum();
  long ql = 33;
  for (int i = 1; i <= 4; ++i) ql += static_cast<long>(i) * lam.part(i);
  QProduct p;
  p.times_q(ql).times_one_minus(1, 11).times_one_plus(1, 2);
  p.times_poch(sl + 15, 2, -1, 2);
  p.times_one_minus(sl + 19, -1);
  for (int j = 1; j <= 4; ++j) p.times_one_minus(sl + lam.part(j) - j + 23);
  for (int i = 1; i <= 4; ++i) {
    p.times_poch(lam.part(i) + 6 - i, 2, -1, 2);
    p.times_one_minus(sl - lam.part(i) + 10 + i, -1);
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
      p.times_one_minus(lam.part(i) + lam.part(j) + 13 - i - j, -1);
    }
  return p.value();
}

RatQ rhs_class9b(const Partition& lam) {
  long sl = lam.sum();
  long ql = 37;
  for (int i = 1; i <= 4; ++i) ql += static_cast<long>(i) * lam.part(i);
  QProduct p;
  p.times_q(ql).times_one_minus(1, 11).times_one_plus(1);
  p.times_poch(sl + 16, 2, -1);
  p.times_one_minus(sl + 20, -1);
  for (int j = 1; j <= 4; ++j) p.times_one_minus(sl + lam.part(j) - j + 24);
  for (int i = 1; i <= 4; ++i) {
    p.times_poch(lam.part(i) + 7 - i, 2, -1);
    p.times_one_minus(sl - lam.part(i) + 10 + i, -1);
  }
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) {
      p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
      p.times_one_minus(lam.part(i) + lam.part(j) + 14 - i - j, -1);
    }
  return p.value();
}

RatQ rhs_class10_direct(const Partition& lam) {
  long sl = lam.sum();
  long ql = 48;
  for (int i = 1; i <= 5; ++i) ql += static_cast<long>(i) * lam.part(i);
  QProduct p;
  p.negate().times_q(ql).times_one_minus(1, 13).times_one_plus(1, 2);
  p.times_poch(sl + 22, 3, -1);
  for (int i = 1; i <= 5; ++i) {
    p.times_one_minus(sl + lam.part(i) - i + 29);
    p.times_poch(lam.part(i) + 6 - i, 2, -1);
    p.times_one_minus(sl - lam.part(i) + 14 + i, -1);
  }
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
      p.times_one_minus(lam.part(i) + lam.part(j) + 15 - i - j, -1);
    }
  return p.value();
}

RatQ rhs_class11(int n, const Partition& lam, long k) {
  long sl = lam.sum();
  long ql = static_cast<long>(n) * (static_cast<long>(n) * n + 6 * n - 1) / 6;
  for (int i = 1; i <= n; ++i) ql += static_cast<long>(i) * lam.part(i);
  QProduct p;
  if (binom2(n + 1) % 2 != 0) p.negate();
  p.times_q(ql).times_one_minus(1, 2 * n + 1);
  p.times_poch(k, 2);
  p.times_poch(sl + k + static_cast<long>(n) * (n + 3) / 2, 3, -1);
  for (int j = 1; j <= n; ++j) {
    p.times_one_minus(sl + lam.part(j) + k + static_cast<long>(n) * (n + 5) / 2 + 2 - j);
    p.times_poch(lam.part(j) + n + 1 - j, 2, -1);
    p.times_one_minus(sl - lam.part(j) + k + static_cast<long>(n) * (n + 1) / 2 + j - 2, -1);
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
      p.times_one_minus(2L * n + 4 - i - j + lam.part(i) + lam.part(j), -1);
    }
  return p.value();
}

RatQ rhs_class12_direct(const Partition& lam) {
  long sl = lam.sum();
  long ql = 42;
  for (int i = 1; i <= 3; ++i) ql += static_cast<long>(i) * lam.part(i);
  QProduct p;
  p.negate().times_q(ql).times_one_minus(1, 12);
  p.times_one_minus(3, -2).times_one_minus(4, -1);
  p.times_poch(sl + 15, 3, -1);
  for (int i = 1; i <= 3; ++i) {
    p.times_one_minus(lam.part(i) + 4 - i);
    p.times_one_minus(sl + lam.part(i) + 25 - i);
    p.times_poch(lam.part(i) + 8 - i, 3, -1);
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
      p.times_poch(lam.part(i) + lam.part(j) + 15 - i - j, 2, -1);
    }
  return p.value();
}

RatQ rhs_class12_stage2(const Partition& lam) {
  long sl = lam.sum();
  long ql = 48;
  for (int i = 1; i <= 3; ++i) ql += static_cast<long>(i + 1) * lam.part(i);
  QProduct p;
  p.times_q(ql).times_one_minus(1, 15);
  p.times_one_minus(3, -2).times_one_minus(4, -1);
  p.times_poch(sl + 15, 3, -1);
  for (int i = 1; i <= 3; ++i) {
    p.times_one_minus(sl + lam.part(i) + 25 - i);
    p.times_poch(lam.part(i) + 8 - i, 3, -1);
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      p.times_one_minus(lam.part(i) - lam.part(j) + j - i);
      p.times_poch(lam.part(i) + lam.part(j) + 15 - i - j, 2, -1);
    }
  return p.value();
}

RatQ rhs_class13(const Partition& lam) {
  long sl = lam.sum();
  long ql = 47 + lam.part(1) + 2L * lam.part(2);
  QProduct p;
  p.negate().times_q(ql).times_one_minus(1, 17).times_one_plus(1, 2);
  p.times_poch(1, 7, -1).times_poch(3, 3, -1);
  p.times_one_minus(lam.part(1) - lam.part(2) + 1);
  p.times_one_minus(sl + 23);
  p.times_poch(sl + 13, 5, -1);
  for (int i = 1; i <= 2; ++i) {
    p.times_poch(lam.part(i) + 3 - i, 2);
    p.times_one_minus(sl + lam.part(i) + 26 - i);
    p.times_poch(lam.part(i) + 9 - i, 5, -1);
  }
  return p.value();
}

RatQ rhs_class14(long m) {
  QProduct p;
  p.negate().times_q(m + 52).times_one_minus(1, 20).times_one_plus(1, 4);
  p.times_poch(m + 1, 3).times_poch(m + 24, 2).times_one_plus(m + 13);
  p.times_poch(1, 11, -1).times_poch(4, 5, -1).times_poch(m + 9, 9, -1);
  return p.value();
}

RatQ rhs_class15() {
  QProduct p;
  p.negate().times_q(57).times_one_minus(1, 18).times_one_plus(1, 3);
  p.times_poch(1, 3, 2).times_poch(25, 3);
  p.times_poch(1, 17, -1).times_poch(5, 9, -1).times_one_minus(9, -1);
  return p.value();
}

}  // namespace

RatQ rhs_closed_form(const ClassInstance& inst) {
  inst.validate();
  const Partition& lam = inst.lambda;
  const Partition& mu = inst.mu;
  switch (inst.id) {
    case ClassId::C1: return rhs_class1(inst.n, lam, mu);
    case ClassId::C2: return rhs_class2(inst.n, mu, inst.k);
    case ClassId::C3: return rhs_class3(lam, mu, inst.m);
    case ClassId::C4: return rhs_class4(inst.n, lam, mu, inst.k);
    case ClassId::C5: return rhs_class5(lam, mu);
    case ClassId::C6: return rhs_class6(mu, inst.m);
    case ClassId::C7: return rhs_class7(lam, mu);
    case ClassId::C8a: return rhs_class8a(lam);
    case ClassId::C8b: return rhs_class8b(lam);
    case ClassId::C8c: return rhs_class8c(lam);
    case ClassId::C8d: return rhs_class8d_direct(lam);
    case ClassId::C9a: return rhs_class9a(lam);
    case ClassId::C9b: return rhs_class9b(lam);
    case ClassId::C10: return rhs_class10_direct(lam);
    case ClassId::C11: return rhs_class11(inst.n + inst.eps, lam.padded(inst.n + inst.eps), inst.k);
    case ClassId::C12: return rhs_class12_direct(lam);
    case ClassId::C13: return rhs_class13(lam);
    case ClassId::C14: return rhs_class14(inst.m);
    case ClassId::C15: return rhs_class15();
  }
  throw std::logic_error("rhs_closed_form: unhandled class");
}

RatQ f_helper(const Partition& nu_in, int eps) {
  if (eps != 0 && eps != 1)
    throw std::invalid_argument("f_helper: no product form for eps >= 2");
  Partition nu = nu_in.padded(4);
  long s = nu.sum();
  long ql = 12;
  for (int i = 1; i <= 4; ++i) ql += static_cast<long>(i - 1) * nu.part(i);
  QProduct p;
  p.negate().times_q(ql).times_one_minus(1, 5);
  p.times_one_minus(s + 12 - eps);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) p.times_one_minus(nu.part(i) - nu.part(j) + j - i);
  for (int i = 1; i <= 4; ++i) {
    p.times_one_minus(s - nu.part(i) + 6 + i, -1);
    p.times_one_minus(nu.part(i) + 5 - i, -1);
    p.times_one_minus(nu.part(i) + 6 - i, -1);
  }
  return p.value();
}

RatQ f_helper_defining_integral(const Partition& nu_in, int eps) {
  Partition nu = nu_in.padded(4);
  std::vector<int> exps;
  for (int j = 1; j <= 4; ++j) exps.push_back(nu.part(j) + 4 - j);
  ExpVec e = {0, 0, 0, eps};
  MPoly f = MPoly::monomial(4, e, RatQ(1)) *
            (MPoly::variable(4, 0) - MPoly::variable(4, 1)) * alternant(4, exps, {0, 1, 2, 3});
  return integrate_simplex(f);
}

RatQ g_helper(const Partition& nu_in, long m) {
  Partition nu = nu_in.padded(4);
  long s = nu.sum();
  long ql = 12;
  for (int i = 1; i <= 4; ++i) ql += static_cast<long>(i) * nu.part(i + 1);
  QProduct p;
  p.times_q(ql).times_one_minus(1, 4);
  p.times_one_minus(s + 12);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) p.times_one_minus(nu.part(i) - nu.part(j) + j - i);
  p.times_one_minus(s + 11 + m, -1);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) p.times_one_minus(nu.part(i) + nu.part(j) + 11 - i - j, -1);
  for (int i = 1; i <= 4; ++i) p.times_one_minus(nu.part(i) + 5 - i, -1);
  return p.value();
}

RatQ g_helper_defining_integral(const Partition& nu_in, long m) {
  Partition nu = nu_in.padded(4);
  std::vector<int> exps;
  for (int j = 1; j <= 4; ++j) exps.push_back(nu.part(j) + 4 - j);
  ExpVec e = {0, 1, 0, static_cast<int>(m)};
  MPoly f = MPoly::monomial(4, e, RatQ(1)) * alternant(4, exps, {0, 1, 2, 3});
  return integrate_simplex(f);
}

std::pair<RatQ, RatQ> swivel4_identity_sides(const Partition& mu_in) {
  Partition mu = mu_in.padded(5);
  long s = mu.sum();
  QProduct lhs;
  for (int j = 1; j <= 5; ++j) {
    lhs.times_one_minus(s + mu.part(j) - j + 23);
    lhs.times_poch(mu.part(j) + 6 - j, 2, -1);
  }
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      lhs.times_one_minus(mu.part(i) - mu.part(j) + j - i);
      lhs.times_one_minus(s - mu.part(i) - mu.part(j) + i + j + 4, -1);
    }

  long qexp = -23;
  for (int i = 1; i <= 5; ++i) qexp -= static_cast<long>(i - 1) * mu.part(i);
  RatQ rhs;
  for (int ell = 1; ell <= 5; ++ell) {
    Partition nu = alternant_expansion_partition(mu, 5, ell);
    QProduct a;  // (1-q^{|mu|+16})(1+q^{|mu|+17})
    a.times_one_minus(s + 16).times_one_plus(s + 17);
    QProduct b;  // 1-q^{2|mu|+33}
    b.times_one_minus(2 * s + 33);
    RatQ term = a.value() * f_helper(nu, 1) - b.value() * f_helper(nu, 0);
    QProduct scale;
    if ((5 - ell) % 2 != 0) scale.negate();
    scale.times_q(qexp).times_one_minus(1, -6);
    rhs += scale.value() * term;
  }
  return {lhs.value(), rhs};
}

std::pair<RatQ, RatQ> tagged_swivel_identity_sides(const Partition& mu_in) {
  Partition mu = mu_in.padded(5);
  long s = mu.sum();
  QProduct lhs;
  for (int i = 1; i <= 5; ++i) {
    lhs.times_one_minus(s + mu.part(i) - i + 23);
    lhs.times_one_minus(mu.part(i) + 6 - i, -1);
    lhs.times_one_minus(s - mu.part(i) + 10 + i, -1);
  }
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      lhs.times_one_minus(mu.part(i) - mu.part(j) + j - i);
      lhs.times_one_minus(mu.part(i) + mu.part(j) - i - j + 13, -1);
    }

  long qexp = -23;
  for (int i = 1; i <= 5; ++i) qexp -= static_cast<long>(i - 1) * mu.part(i);
  RatQ rhs;
  for (int ell = 1; ell <= 5; ++ell) {
    Partition nu = alternant_expansion_partition(mu, 5, ell);
    QProduct a;
    a.times_one_minus(2 * s + 33);
    QProduct b;
    b.times_one_minus(s + 16).times_one_plus(s + 17);
    RatQ term = a.value() * g_helper(nu, 0) - b.value() * g_helper(nu, 1);
    QProduct scale;
    if ((5 - ell) % 2 != 0) scale.negate();
    scale.times_q(qexp).times_one_minus(1, -5).times_one_minus(s + 16, -1);
    rhs += scale.value() * term;
  }
  return {lhs.value(), rhs};
}

std::pair<RatQ, RatQ> pump_identity_sides(const Partition& lambda) {
  static const MPoly inner = pump_inner_integral();  // lambda-independent
  Partition lam = lambda.padded(3);
  std::vector<int> exps;
  for (int j = 1; j <= 3; ++j) exps.push_back(lam.part(j) + 3 - j);
  RatQ lhs = integrate_simplex(inner * alternant(3, exps, {0, 1, 2}));
  return {lhs, rhs_class12_stage2(lam)};
}

MPoly pump_inner_integral() {
  // Ambient variables: x_1..x_6 are 0..5, y_1..y_3 are 6..8.
  const int nv = 9;
  auto dd = [&](int i, int j) { return MPoly::variable(nv, i) - MPoly::variable(nv, j); };
  MPoly f = dd(0, 1) * dd(2, 3) * dd(4, 5) * alternant(nv, {2, 1, 0}, {0, 1, 2}) *
            alternant(nv, {2, 1, 0}, {3, 4, 5});
  std::vector<Step> steps = {
      {0, Bound::zero(), Bound::variable(1)},  // x1: 0 .. x2
      {1, Bound::zero(), Bound::variable(6)},  // x2: 0 .. y1
      {2, Bound::variable(6), Bound::variable(7)},
      {3, Bound::variable(7), Bound::variable(8)},
      {4, Bound::variable(8), Bound::variable(5)},
      {5, Bound::variable(8), Bound::one()},
  };
  MPoly g = integrate_steps(f, steps);
  MPoly out(3);
  for (const auto& [e, c] : g.terms()) {
    for (int i = 0; i < 6; ++i)
      if (e[static_cast<size_t>(i)] != 0) throw std::logic_error("pump_inner_integral: x variable survived");
    out.add_term({e[6], e[7], e[8]}, c);
  }
  return out;
}

MPoly pump_inner_closed_form() {
  // q^2 y1^4 y2 (y1-y2)(y2-1)(y2-y3)(q y3-1)(y3-q)(y3-1)^2
  //   * (q y1 y2^2 + q^2 y2 y3 - q y2^2 y3 - q y2^2 - q y1 y3 + y2 y3)
  //   / ((q^2+q+1)^4 (q^2+1)^2 (q+1)^5)
  const int nv = 3;
  const RatQ one(1), q(PolyQ::q_power(1));
  auto v = [&](int i) { return MPoly::variable(nv, i); };
  MPoly head = MPoly::monomial(nv, {4, 1, 0}, one);
  MPoly f = head * (v(0) - v(1)) * (v(1) - MPoly::constant(nv, one)) * (v(1) - v(2));
  MPoly qy3m1(nv);
  qy3m1.add_term({0, 0, 1}, q);
  qy3m1.add_term({0, 0, 0}, -one);
  MPoly y3mq(nv);
  y3mq.add_term({0, 0, 1}, one);
  y3mq.add_term({0, 0, 0}, -q);
  MPoly y3m1 = v(2) - MPoly::constant(nv, one);
  f = f * qy3m1 * y3mq * y3m1 * y3m1;
  MPoly last(nv);
  last.add_term({1, 2, 0}, q);
  last.add_term({0, 1, 1}, q * q + one);
  last.add_term({0, 2, 1}, -q);
  last.add_term({0, 2, 0}, -q);
  last.add_term({1, 0, 1}, -q);
  f = f * last;
  // (q^2+q+1) = (1-q^3)/(1-q); (q^2+1) = (1-q^4)/(1-q^2); (q+1) = (1-q^2)/(1-q)
  QProduct scale;
  scale.times_q(2);
  scale.times_one_minus(3, -4).times_one_minus(1, 4);
  scale.times_one_minus(4, -2).times_one_minus(2, 2);
  scale.times_one_minus(2, -5).times_one_minus(1, 5);
  return f.times(scale.value());
}

}  // namespace qhook
