#include "qhook/classes.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace qhook {

namespace {

const std::map<std::string, ClassId> kIdByName = {
    {"1", ClassId::C1},   {"2", ClassId::C2},   {"3", ClassId::C3},   {"4", ClassId::C4},
    {"5", ClassId::C5},   {"6", ClassId::C6},   {"7", ClassId::C7},   {"8a", ClassId::C8a},
    {"8b", ClassId::C8b}, {"8c", ClassId::C8c}, {"8d", ClassId::C8d}, {"9a", ClassId::C9a},
    {"9b", ClassId::C9b}, {"10", ClassId::C10}, {"11", ClassId::C11}, {"12", ClassId::C12},
    {"13", ClassId::C13}, {"14", ClassId::C14}, {"15", ClassId::C15},
};

// Arity of the lambda / mu slots (0 = unused); n-dependent for 1, 2, 4, 11.
int lambda_arity(ClassId id, int n) {
  switch (id) {
    case ClassId::C1: return n;
    case ClassId::C3: return 2;
    case ClassId::C4: return n - 1;
    case ClassId::C5: return 2;
    case ClassId::C8a: return 3;
    case ClassId::C8b:
    case ClassId::C8c: return 4;
    case ClassId::C8d: return 5;
    case ClassId::C9a:
    case ClassId::C9b: return 4;
    case ClassId::C10: return 5;
    case ClassId::C11: return n;
    case ClassId::C12: return 3;
    case ClassId::C13: return 2;
    case ClassId::C7: return 3;
    default: return 0;
  }
}

int mu_arity(ClassId id, int n) {
  switch (id) {
    case ClassId::C1: return n;
    case ClassId::C2: return n;
    case ClassId::C3: return 2;
    case ClassId::C4: return n + 1;
    case ClassId::C5: return 3;
    case ClassId::C6: return 4;
    case ClassId::C7: return 2;
    default: return 0;
  }
}

bool uses_k(ClassId id) { return id == ClassId::C2 || id == ClassId::C4 || id == ClassId::C11; }
bool uses_m(ClassId id) { return id == ClassId::C3 || id == ClassId::C6 || id == ClassId::C14; }
bool uses_n(ClassId id) {
  return id == ClassId::C1 || id == ClassId::C2 || id == ClassId::C4 || id == ClassId::C11;
}

MPoly var_diff(int nv, int i, int j) { return MPoly::variable(nv, i) - MPoly::variable(nv, j); }

MPoly alt_of(int nv, const Partition& lam, const std::vector<int>& vars) {
  int len = static_cast<int>(vars.size());
  Partition p = lam.padded(len);
  std::vector<int> exps;
  for (int j = 1; j <= len; ++j) exps.push_back(p.part(j) + len - j);
  return alternant(nv, exps, vars);
}

std::vector<int> var_range(int first, int last) {  // inclusive
  std::vector<int> v;
  for (int i = first; i <= last; ++i) v.push_back(i);
  return v;
}

}  // namespace

std::string class_id_str(ClassId id) {
  for (const auto& [name, v] : kIdByName)
    if (v == id) return name;
  return "?";
}

std::optional<ClassId> class_id_parse(const std::string& s) {
  auto it = kIdByName.find(s);
  if (it == kIdByName.end()) return std::nullopt;
  return it->second;
}

std::vector<ClassId> all_class_ids() {
  return {ClassId::C1,  ClassId::C2,  ClassId::C3,  ClassId::C4,  ClassId::C5,
          ClassId::C6,  ClassId::C7,  ClassId::C8a, ClassId::C8b, ClassId::C8c,
          ClassId::C8d, ClassId::C9a, ClassId::C9b, ClassId::C10, ClassId::C11,
          ClassId::C12, ClassId::C13, ClassId::C14, ClassId::C15};
}

void ClassInstance::validate() const {
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("class " + class_id_str(id) + ": " + msg);
  };
  switch (id) {
    case ClassId::C1:
      if (n < 1) fail("need n >= 1");
      break;
    case ClassId::C2:
      if (n < 1) fail("need n >= 1");
      if (k < 0) fail("need k >= 0");
      break;
    case ClassId::C4:
      if (n < 2) fail("need n >= 2");
      if (k < 0) fail("need k >= 0");
      break;
    case ClassId::C11:
      if (n < 3) fail("need n >= 3");
      if (k < 1) fail("need k >= 1");
      if (eps != 0 && eps != 1) fail("eps must be 0 or 1");
      break;
    case ClassId::C3:
    case ClassId::C6:
    case ClassId::C14:
      if (m < 0) fail("need m >= 0");
      break;
    default:
      break;
  }
  int la = lambda_arity(id, n), ma = mu_arity(id, n);
  if (lambda.length() > la) fail("lambda has more than " + std::to_string(la) + " parts");
  if (mu.length() > ma) fail("mu has more than " + std::to_string(ma) + " parts");
}

std::string ClassInstance::params_str() const {
  std::ostringstream os;
  bool first = true;
  auto field = [&](const std::string& kv) {
    if (!first) os << " ";
    first = false;
    os << kv;
  };
  int la = lambda_arity(id, n), ma = mu_arity(id, n);
  if (la > 0) field("lambda=" + lambda.padded(la).str());
  if (ma > 0) field("mu=" + mu.padded(ma).str());
  if (uses_k(id)) field("k=" + std::to_string(k));
  if (uses_m(id)) field("m=" + std::to_string(m));
  if (id == ClassId::C11) field("eps=" + std::to_string(eps));
  if (uses_n(id)) field("n=" + std::to_string(n));
  return os.str();
}

std::string ClassInstance::key() const {
  const auto ids = all_class_ids();
  int idx = 0;
  for (size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) idx = static_cast<int>(i);
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%02d", idx);
  return std::string(buf) + " " + params_str();
}

ClassInstance parse_instance_line(const std::string& line) {
  std::istringstream is(line);
  std::string kw, idtok;
  if (!(is >> kw) || kw != "class" || !(is >> idtok))
    throw std::invalid_argument("instance line must start with `class <id>`");
  auto id = class_id_parse(idtok);
  if (!id) throw std::invalid_argument("unknown class id '" + idtok + "'");
  ClassInstance inst;
  inst.id = *id;
  std::string tok;
  while (is >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad field '" + tok + "'");
    std::string key = tok.substr(0, eq), val = tok.substr(eq + 1);
    if (key == "lambda")
      inst.lambda = Partition::parse(val);
    else if (key == "mu")
      inst.mu = Partition::parse(val);
    else if (key == "k")
      inst.k = std::stoi(val);
    else if (key == "m")
      inst.m = std::stoi(val);
    else if (key == "eps")
      inst.eps = std::stoi(val);
    else if (key == "n")
      inst.n = std::stoi(val);
    else
      throw std::invalid_argument("unknown field '" + key + "'");
  }
  inst.validate();
  return inst;
}

ClassSpec class_spec(const ClassInstance& inst) {
  inst.validate();
  const Partition empty;
  const Partition lam = inst.lambda.padded(std::max(lambda_arity(inst.id, inst.n), 0));
  const Partition mu = inst.mu.padded(std::max(mu_arity(inst.id, inst.n), 0));
  int n = inst.n, k = inst.k, m = inst.m;
  switch (inst.id) {
    case ClassId::C1:
      return {n, 0, {{lam, n, 1}, {mu, n, 1}}};
    case ClassId::C2: {
      XSet x = {{mu, n, 1}};
      if (k > 0) x.push_back({Partition{k}, 1, n});
      return {n, 0, x};
    }
    case ClassId::C3:
      return {2, m, {{lam, 2, 1}, {mu, 2, 1}, {Partition{m}, 1, 1}}};
    case ClassId::C4:
      return {n + 1, lam.part(1) + n - 2,
              {{lam, n - 1, 1}, {mu, n + 1, 1}, {Partition{k}, 1, n}}};
    case ClassId::C5:
      return {3, lam.part(1) + 1,
              {{lam, 2, 1}, {mu, 3, 1}, {empty, 2, 2}, {Partition{1}, 1, 1}}};
    case ClassId::C6:
      return {4, m, {{mu, 4, 1}, {Partition{m}, 1, 2}}};
    case ClassId::C7:
      return {4, lam.part(1) + 2,
              {{lam, 3, 1}, {empty, 2, 1}, {mu.padded(3), 3, 2}, {empty, 2, 3}}};
    case ClassId::C8a:
      return {4, lam.part(1) + 2,
              {{lam, 3, 1}, {Partition{2}, 1, 1}, {empty, 2, 1}, {empty, 3, 2}, {empty, 2, 3}}};
    case ClassId::C8b:
      return {5, lam.part(1) + 3,
              {{lam, 4, 1}, {Partition{1, 0}, 2, 1}, {empty, 2, 2}, {empty, 3, 3}, {empty, 2, 4}}};
    case ClassId::C8c:
      return {5, lam.part(1) + 3,
              {{lam, 4, 1}, {Partition{1, 1}, 2, 1}, {empty, 2, 2}, {empty, 3, 3}, {empty, 2, 4}}};
    case ClassId::C8d:
      return {6, lam.part(1) + 4,
              {{lam, 5, 1}, {empty, 3, 1}, {empty, 2, 3}, {empty, 3, 4}, {empty, 2, 5}}};
    case ClassId::C9a:
      return {5, lam.part(1) + 3,
              {{lam, 4, 1}, {Partition{1}, 1, 1}, {Partition{1, 0}, 2, 1}, {empty, 2, 2},
               {empty, 3, 3}, {empty, 2, 4}}};
    case ClassId::C9b:
      return {5, lam.part(1) + 3,
              {{lam, 4, 1}, {Partition{1}, 1, 1}, {Partition{1, 1}, 2, 1}, {empty, 2, 2},
               {empty, 3, 3}, {empty, 2, 4}}};
    case ClassId::C10:
      return {6, lam.part(1) + 4,
              {{lam, 5, 1}, {empty, 2, 1}, {Partition{1}, 2, 2}, {empty, 2, 3}, {empty, 3, 4},
               {empty, 2, 5}}};
    case ClassId::C11: {
      XSet x = {{lam, n, 1},
                {Partition{inst.k - 1}, 3, n - 1},
                {empty, 2, n},
                {Partition(std::vector<int>{inst.eps}), 1, 1}};
      for (int i = 1; i <= n - 2; ++i) x.push_back({empty, 2, i});
      return {n + 1, lam.part(1) + n - 1, x};
    }
    case ClassId::C12:
      return {6, lam.part(1) + 3,
              {{empty, 3, 1}, {empty, 2, 1}, {lam.padded(4), 4, 2}, {empty, 2, 3}, {empty, 3, 4},
               {empty, 2, 5}}};
    case ClassId::C13:
      return {6, lam.part(1) + 3,
              {{Partition{1}, 1, 1}, {empty, 2, 1}, {empty, 3, 1}, {lam.padded(4), 4, 2},
               {empty, 2, 3}, {empty, 3, 4}, {empty, 2, 5}}};
    case ClassId::C14:
      return {6, m + 3,
              {{Partition{2}, 1, 1}, {empty, 2, 1}, {empty, 3, 1}, {Partition{m}.padded(4), 4, 2},
               {empty, 2, 3}, {empty, 3, 4}, {empty, 2, 5}}};
    case ClassId::C15:
      return {6, 3,
              {{Partition{3}, 1, 1}, {empty, 2, 1}, {empty, 3, 1}, {empty, 4, 2}, {empty, 2, 3},
               {empty, 3, 4}, {empty, 2, 5}}};
  }
  throw std::logic_error("class_spec: unhandled class");
}

namespace {

MPoly direct_integrand(const ClassInstance& inst) {
  const Partition lam = inst.lambda;
  const Partition mu = inst.mu;
  int n = inst.n, k = inst.k, m = inst.m;
  switch (inst.id) {
    case ClassId::C1:
      return alt_of(n, lam, var_range(0, n - 1)) * alt_of(n, mu, var_range(0, n - 1));
    case ClassId::C2: {
      MPoly f = alt_of(n, mu, var_range(0, n - 1));
      ExpVec e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(n - 1)] = k;
      f = f * MPoly::monomial(n, e, RatQ(1));
      if ((n * (n - 1) / 2) % 2 != 0) f = -f;
      return f;
    }
    case ClassId::C3: {
      ExpVec e = {m, 0};
      return MPoly::monomial(2, e, RatQ(1)) * alt_of(2, lam, {0, 1}) * alt_of(2, mu, {0, 1});
    }
    case ClassId::C4: {
      int nv = n + 1;
      ExpVec e(static_cast<size_t>(nv), 0);
      e[static_cast<size_t>(n - 1)] = k;
      return MPoly::monomial(nv, e, RatQ(1)) * alt_of(nv, lam, var_range(0, n - 2)) *
             alt_of(nv, mu, var_range(0, n));
    }
    case ClassId::C5:
      return MPoly::variable(3, 0) * var_diff(3, 1, 2) * alt_of(3, lam, {0, 1}) *
             alt_of(3, mu, {0, 1, 2});
    case ClassId::C6: {
      ExpVec e = {0, m, 0, 0};
      return MPoly::monomial(4, e, RatQ(1)) * alt_of(4, mu, {0, 1, 2, 3});
    }
    case ClassId::C7:
      return var_diff(4, 0, 1) * var_diff(4, 2, 3) * alt_of(4, lam, {0, 1, 2}) *
             alt_of(4, mu, {1, 2, 3});
    case ClassId::C8a: {
      ExpVec e = {2, 0, 0, 0};
      return MPoly::monomial(4, e, RatQ(1)) * var_diff(4, 0, 1) * var_diff(4, 2, 3) *
             alt_of(4, Partition{}, {1, 2, 3}) * alt_of(4, lam, {0, 1, 2});
    }
    case ClassId::C8b:
      return (MPoly::variable(5, 0) * MPoly::variable(5, 0) -
              MPoly::variable(5, 1) * MPoly::variable(5, 1)) *
             var_diff(5, 1, 2) * var_diff(5, 3, 4) * alt_of(5, Partition{}, {2, 3, 4}) *
             alt_of(5, lam, {0, 1, 2, 3});
    case ClassId::C8c:
      return MPoly::variable(5, 0) * MPoly::variable(5, 1) * var_diff(5, 0, 1) *
             var_diff(5, 1, 2) * var_diff(5, 3, 4) * alt_of(5, Partition{}, {2, 3, 4}) *
             alt_of(5, lam, {0, 1, 2, 3});
    case ClassId::C8d:
      return var_diff(6, 2, 3) * var_diff(6, 4, 5) * alt_of(6, Partition{}, {0, 1, 2}) *
             alt_of(6, Partition{}, {3, 4, 5}) * alt_of(6, lam, {0, 1, 2, 3, 4});
    case ClassId::C9a:
      return MPoly::variable(5, 0) *
             (MPoly::variable(5, 0) * MPoly::variable(5, 0) -
              MPoly::variable(5, 1) * MPoly::variable(5, 1)) *
             var_diff(5, 1, 2) * var_diff(5, 3, 4) * alt_of(5, Partition{}, {2, 3, 4}) *
             alt_of(5, lam, {0, 1, 2, 3});
    case ClassId::C9b: {
      ExpVec e = {2, 1, 0, 0, 0};
      return MPoly::monomial(5, e, RatQ(1)) * var_diff(5, 0, 1) * var_diff(5, 1, 2) *
             var_diff(5, 3, 4) * alt_of(5, Partition{}, {2, 3, 4}) * alt_of(5, lam, {0, 1, 2, 3});
    }
    case ClassId::C10:
      return var_diff(6, 0, 1) *
             (MPoly::variable(6, 1) * MPoly::variable(6, 1) -
              MPoly::variable(6, 2) * MPoly::variable(6, 2)) *
             var_diff(6, 2, 3) * var_diff(6, 4, 5) * alt_of(6, Partition{}, {3, 4, 5}) *
             alt_of(6, lam, {0, 1, 2, 3, 4});
    case ClassId::C11: {
      int ne = n + inst.eps;  // eps = 1 reads the identity at n+1 with the same lambda
      int nv = ne + 1;
      MPoly f = alt_of(nv, lam.padded(ne), var_range(0, ne - 1)) *
                alt_of(nv, Partition{k - 1}, {ne - 2, ne - 1, ne}) * var_diff(nv, ne - 1, ne);
      for (int i = 1; i <= ne - 2; ++i) f = f * var_diff(nv, i - 1, i);
      return f;
    }
    case ClassId::C12:
      return var_diff(6, 0, 1) * var_diff(6, 2, 3) * var_diff(6, 4, 5) *
             alt_of(6, Partition{}, {0, 1, 2}) * alt_of(6, Partition{}, {3, 4, 5}) *
             alt_of(6, lam.padded(4), {1, 2, 3, 4});
    case ClassId::C13: {
      ExpVec e = {1, 0, 0, 0, 0, 0};
      return MPoly::monomial(6, e, RatQ(1)) * var_diff(6, 0, 1) * var_diff(6, 2, 3) *
             var_diff(6, 4, 5) * alt_of(6, Partition{}, {0, 1, 2}) *
             alt_of(6, Partition{}, {3, 4, 5}) * alt_of(6, lam.padded(4), {1, 2, 3, 4});
    }
    case ClassId::C14: {
      ExpVec e = {2, 0, 0, 0, 0, 0};
      return MPoly::monomial(6, e, RatQ(1)) * var_diff(6, 0, 1) * var_diff(6, 2, 3) *
             var_diff(6, 4, 5) * alt_of(6, Partition{}, {0, 1, 2}) *
             alt_of(6, Partition{}, {3, 4, 5}) * alt_of(6, Partition{m}.padded(4), {1, 2, 3, 4});
    }
    case ClassId::C15: {
      ExpVec e = {3, 0, 0, 0, 0, 0};
      return MPoly::monomial(6, e, RatQ(1)) * var_diff(6, 0, 1) * var_diff(6, 2, 3) *
             var_diff(6, 4, 5) * alt_of(6, Partition{}, {0, 1, 2}) *
             alt_of(6, Partition{}, {3, 4, 5}) * alt_of(6, Partition{}.padded(4), {1, 2, 3, 4});
    }
  }
  throw std::logic_error("direct_integrand: unhandled class");
}

}  // namespace

RatQ lhs_qintegral(const ClassInstance& inst) {
  inst.validate();
  return integrate_simplex(direct_integrand(inst));
}

VerifyReport verify_class(const ClassInstance& inst, VerifyRoute route) {
  inst.validate();
  auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.inst = inst;
  bool reformulated = route == VerifyRoute::Default &&
                      (inst.id == ClassId::C8d || inst.id == ClassId::C10 || inst.id == ClassId::C12);
  if (!reformulated) {
    rep.lhs = lhs_qintegral(inst);
    rep.rhs = rhs_closed_form(inst);
  } else if (inst.id == ClassId::C12) {
    auto [lhs, rhs] = pump_identity_sides(inst.lambda);
    rep.lhs = lhs;
    rep.rhs = rhs;
  } else {
    Partition mu = inst.lambda.padded(5) + Partition{1, 1, 1, 1, 1};
    auto [lhs, rhs] = inst.id == ClassId::C8d ? swivel4_identity_sides(mu)
                                              : tagged_swivel_identity_sides(mu);
    rep.lhs = lhs;
    rep.rhs = rhs;
  }
  rep.pass = rep.lhs == rep.rhs;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

std::string VerifyReport::line(bool with_seconds) const {
  std::string out = "CLASS " + class_id_str(inst.id) + " " + inst.params_str() + " " +
                    (pass ? "PASS" : "FAIL");
  if (with_seconds) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), " %.3f", seconds);
    out += buf;
  }
  return out;
}

ClassInstance canonical_instance(ClassId id) {
  ClassInstance inst;
  inst.id = id;
  switch (id) {
    case ClassId::C1: inst.n = 2; break;
    case ClassId::C2: inst.n = 4; break;
    case ClassId::C3: break;
    case ClassId::C4: inst.n = 2; break;
    case ClassId::C5: break;
    case ClassId::C6: inst.mu = Partition{1, 1, 1, 1}; break;
    case ClassId::C11:
      inst.n = 3;
      inst.k = 1;
      break;
    default: break;
  }
  inst.validate();
  return inst;
}

}  // namespace qhook
