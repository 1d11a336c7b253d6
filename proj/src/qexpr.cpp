#include "qhook/qexpr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace qhook {

namespace {

struct Lexer {
  std::string s;
  size_t pos = 0;
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c)
      throw std::invalid_argument(std::string("qexpr: expected '") + c + "' at offset " +
                                  std::to_string(pos));
    ++pos;
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  std::string word() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
      ++pos;
    if (start == pos) throw std::invalid_argument("qexpr: expected a word at offset " + std::to_string(pos));
    return s.substr(start, pos - start);
  }
  long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("qexpr: expected an integer at offset " + std::to_string(pos));
    return std::stol(s.substr(start, pos - start));
  }
};

int parse_var(Lexer& lx, int nvars) {
  std::string w = lx.word();
  if (w.size() < 2 || w[0] != 'x') throw std::invalid_argument("qexpr: expected a variable like x1, got '" + w + "'");
  int idx = std::stoi(w.substr(1));
  if (idx < 1 || idx > nvars) throw std::invalid_argument("qexpr: variable " + w + " out of range");
  return idx - 1;
}

MPoly parse_expr(Lexer& lx, int nvars) {
  char c = lx.peek();
  if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
    return MPoly::constant(nvars, RatQ(lx.integer()));
  std::string head = lx.word();
  if (head == "mul") {
    lx.expect('(');
    MPoly r = parse_expr(lx, nvars);
    while (lx.accept(',')) r = r * parse_expr(lx, nvars);
    lx.expect(')');
    return r;
  }
  if (head == "sub") {
    lx.expect('(');
    MPoly a = parse_expr(lx, nvars);
    lx.expect(',');
    MPoly b = parse_expr(lx, nvars);
    lx.expect(')');
    return a - b;
  }
  if (head == "mono") {
    lx.expect('(');
    int v = parse_var(lx, nvars);
    long p = 1;
    if (lx.accept('^')) p = lx.integer();
    lx.expect(')');
    if (p < 0) throw std::invalid_argument("qexpr: negative monomial power");
    ExpVec e(static_cast<size_t>(nvars), 0);
    e[static_cast<size_t>(v)] = static_cast<int>(p);
    return MPoly::monomial(nvars, e, RatQ(1));
  }
  if (head == "alt") {
    lx.expect('(');
    std::vector<int> exps{static_cast<int>(lx.integer())};
    while (lx.accept(',')) exps.push_back(static_cast<int>(lx.integer()));
    lx.expect(';');
    std::vector<int> vars{parse_var(lx, nvars)};
    while (lx.accept(',')) vars.push_back(parse_var(lx, nvars));
    lx.expect(')');
    return alternant(nvars, exps, vars);
  }
  throw std::invalid_argument("qexpr: unknown operator '" + head + "'");
}

Bound parse_bound(const std::string& tok, int nvars) {
  if (tok == "0") return Bound::zero();
  if (tok == "1") return Bound::one();
  if (tok.size() >= 2 && tok[0] == 'x') {
    int idx = std::stoi(tok.substr(1));
    if (idx < 1 || idx > nvars) throw std::invalid_argument("qexpr: bound variable out of range");
    return Bound::variable(idx - 1);
  }
  throw std::invalid_argument("qexpr: bad bound '" + tok + "'");
}

}  // namespace

QExprJob parse_qexpr(const std::string& text) {
  QExprJob job;
  bool saw_integrand = false;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    if (kw == "vars") {
      if (!(ls >> job.nvars) || job.nvars < 1) throw std::invalid_argument("qexpr: bad vars line");
    } else if (kw == "integrand") {
      if (job.nvars == 0) throw std::invalid_argument("qexpr: vars must come before integrand");
      std::string rest;
      std::getline(ls, rest);
      Lexer lx{rest};
      job.integrand = parse_expr(lx, job.nvars);
      if (!lx.eof()) throw std::invalid_argument("qexpr: trailing input after expression");
      saw_integrand = true;
    } else if (kw == "simplex") {
      job.full_simplex = true;
    } else if (kw == "step") {
      if (job.nvars == 0) throw std::invalid_argument("qexpr: vars must come before steps");
      std::string v, lo, hi;
      if (!(ls >> v >> lo >> hi)) throw std::invalid_argument("qexpr: bad step line");
      if (v.empty() || v[0] != 'x') throw std::invalid_argument("qexpr: step variable must be x<i>");
      int idx = std::stoi(v.substr(1));
      if (idx < 1 || idx > job.nvars) throw std::invalid_argument("qexpr: step variable out of range");
      job.steps.push_back(Step{idx - 1, parse_bound(lo, job.nvars), parse_bound(hi, job.nvars)});
      job.full_simplex = false;
    } else {
      throw std::invalid_argument("qexpr: unknown keyword '" + kw + "'");
    }
  }
  if (!saw_integrand) throw std::invalid_argument("qexpr: missing integrand");
  return job;
}

std::string evaluate_qexpr(const QExprJob& job) {
  if (job.full_simplex) return integrate_simplex(job.integrand).str();
  MPoly g = integrate_steps(job.integrand, job.steps);
  bool constant = true;
  for (const auto& [e, c] : g.terms())
    for (int v : e)
      if (v != 0) constant = false;
  if (constant) {
    RatQ out;
    for (const auto& [e, c] : g.terms()) out += c;
    return out.str();
  }
  return g.str();
}

}  // namespace qhook
