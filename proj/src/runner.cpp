#include "qhook/runner.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qhook/gf.hpp"
#include "qhook/qexpr.hpp"

namespace qhook {

std::vector<ClassInstance> default_sweep(const SweepConfig& cfg) {
  std::vector<ClassInstance> out;
  auto push = [&](ClassInstance inst) {
    inst.validate();
    out.push_back(std::move(inst));
  };
  auto box = [&](int arity) { return partitions_in_box(arity, cfg.max_part); };

  for (ClassId id : all_class_ids()) {
    ClassInstance base;
    base.id = id;
    switch (id) {
      case ClassId::C1:
        for (int n = 1; n <= cfg.nmax; ++n)
          for (const auto& lam : box(n))
            for (const auto& mu : box(n)) {
              ClassInstance c = base;
              c.n = n;
              c.lambda = lam;
              c.mu = mu;
              push(c);
            }
        break;
      case ClassId::C2:
        for (int n = 1; n <= cfg.nmax; ++n)
          for (int k = 0; k <= cfg.kmax; ++k)
            for (const auto& mu : box(n)) {
              ClassInstance c = base;
              c.n = n;
              c.k = k;
              c.mu = mu;
              push(c);
            }
        break;
      case ClassId::C3:
        for (const auto& lam : box(2))
          for (const auto& mu : box(2))
            for (int m = 0; m <= cfg.mmax; ++m) {
              ClassInstance c = base;
              c.lambda = lam;
              c.mu = mu;
              c.m = m;
              push(c);
            }
        break;
      case ClassId::C4:
        for (int n = 2; n <= std::max(2, cfg.nmax); ++n)
          for (int k = 0; k <= cfg.kmax; ++k)
            for (const auto& lam : box(n - 1))
              for (const auto& mu : box(n + 1)) {
                ClassInstance c = base;
                c.n = n;
                c.k = k;
                c.lambda = lam;
                c.mu = mu;
                push(c);
              }
        break;
      case ClassId::C5:
        for (const auto& lam : box(2))
          for (const auto& mu : box(3)) {
            ClassInstance c = base;
            c.lambda = lam;
            c.mu = mu;
            push(c);
          }
        break;
      case ClassId::C6:
        for (const auto& mu : box(4))
          for (int m = 0; m <= cfg.mmax; ++m) {
            ClassInstance c = base;
            c.mu = mu;
            c.m = m;
            push(c);
          }
        break;
      case ClassId::C7:
        for (const auto& lam : box(3))
          for (const auto& mu : box(2)) {
            ClassInstance c = base;
            c.lambda = lam;
            c.mu = mu;
            push(c);
          }
        break;
      case ClassId::C8a:
        for (const auto& lam : box(3)) {
          ClassInstance c = base;
          c.lambda = lam;
          push(c);
        }
        break;
      case ClassId::C8b:
      case ClassId::C8c:
      case ClassId::C9a:
      case ClassId::C9b:
        for (const auto& lam : box(4)) {
          ClassInstance c = base;
          c.lambda = lam;
          push(c);
        }
        break;
      case ClassId::C8d:
      case ClassId::C10:
        for (const auto& lam : box(5)) {
          ClassInstance c = base;
          c.lambda = lam;
          push(c);
        }
        break;
      case ClassId::C11:
        for (int n = 3; n <= std::max(3, cfg.nmax); ++n)
          for (int k = 1; k <= std::max(1, cfg.kmax); ++k)
            for (int eps = 0; eps <= 1; ++eps)
              for (const auto& lam : box(n)) {
                ClassInstance c = base;
                c.n = n;
                c.k = k;
                c.eps = eps;
                c.lambda = lam;
                push(c);
              }
        break;
      case ClassId::C12:
        for (const auto& lam : box(3)) {
          ClassInstance c = base;
          c.lambda = lam;
          push(c);
        }
        break;
      case ClassId::C13:
        for (const auto& lam : box(2)) {
          ClassInstance c = base;
          c.lambda = lam;
          push(c);
        }
        break;
      case ClassId::C14:
        for (int m = 0; m <= cfg.mmax; ++m) {
          ClassInstance c = base;
          c.m = m;
          push(c);
        }
        break;
      case ClassId::C15:
        push(base);
        break;
    }
  }
  return out;
}

std::string RunResult::report_text() const {
  std::ostringstream os;
  for (const auto& rep : reports) os << rep.line(false) << "\n";
  return os.str();
}

RunResult run_instances(const std::vector<ClassInstance>& instances, int jobs) {
  RunResult result;
  result.reports.resize(instances.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> ok{true};
  jobs = std::max(1, jobs);
  auto worker = [&]() {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= instances.size()) break;
      result.reports[i] = verify_class(instances[i]);
      if (!result.reports[i].pass) ok = false;
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  result.all_pass = ok;
  return result;
}

RunResult run_verify_all(const SweepConfig& cfg) {
  return run_instances(default_sweep(cfg), cfg.jobs);
}

std::vector<ClassInstance> parse_instance_file(const std::string& text) {
  std::vector<ClassInstance> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank) continue;
    out.push_back(parse_instance_line(line));
  }
  return out;
}

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open file '" + path + "'");
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

int cmd_verify_class(const std::vector<std::string>& params, bool direct) {
  std::string line = "class";
  for (const auto& p : params) line += " " + p;
  ClassInstance inst = parse_instance_line(line);
  VerifyReport rep = verify_class(inst, direct ? VerifyRoute::Direct : VerifyRoute::Default);
  std::cout << rep.line() << "\n";
  return rep.pass ? 0 : 1;
}

int emit_run_result(const RunResult& res, const std::string& out_path) {
  for (const auto& rep : res.reports) std::cout << rep.line() << "\n";
  std::cout << (res.all_pass ? "ALL PASS" : "FAILURES PRESENT") << " (" << res.reports.size()
            << " instances)\n";
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw std::invalid_argument("cannot write report file '" + out_path + "'");
    f << res.report_text();
  }
  return res.all_pass ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact verification of hook length identities on d-complete posets", "qhook"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "verify class identities");
  verify->require_subcommand(1);

  std::vector<std::string> class_params;
  bool direct = false;
  auto* vclass = verify->add_subcommand("class", "verify one instance: <id> [lambda=..] [mu=..] ...");
  vclass->add_option("params", class_params, "class id followed by key=value fields")->expected(-1);
  vclass->add_flag("--direct", direct, "force the direct multivariate integral (classes 8d, 10, 12)");

  SweepConfig cfg;
  std::string out_path;
  auto* vall = verify->add_subcommand("all", "verify the default instance sweep");
  vall->add_option("--max-part", cfg.max_part, "largest partition part in the sweep");
  vall->add_option("--kmax", cfg.kmax, "largest k");
  vall->add_option("--mmax", cfg.mmax, "largest m");
  vall->add_option("--nmax", cfg.nmax, "largest n for the variable-diagonal classes");
  vall->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  vall->add_option("--out", out_path, "write the (timing-free) report to this file");

  std::string batch_path;
  int batch_jobs = 1;
  std::string batch_out;
  auto* vfile = verify->add_subcommand("file", "verify every instance listed in a batch file");
  vfile->add_option("path", batch_path, "instance file, one `class ...` line per instance")->required();
  vfile->add_option("--jobs", batch_jobs, "worker threads")->check(CLI::PositiveNumber);
  vfile->add_option("--out", batch_out, "write the (timing-free) report to this file");

  std::string poset_path;
  int order = 30;
  bool hlf = false;
  auto* gf = app.add_subcommand("gf", "truncated P-partition generating function of a poset file");
  gf->add_option("--poset", poset_path, "poset file")->required();
  gf->add_option("--N", order, "truncation order");
  gf->add_flag("--hlf", hlf, "also compare against the hook length product");

  std::string hooks_path;
  auto* hooks = app.add_subcommand("hooks", "hook lengths of a poset file, in element order");
  hooks->add_option("--poset", hooks_path, "poset file")->required();

  std::string expr_path;
  auto* qint = app.add_subcommand("qint", "evaluate a q-integral expression file");
  qint->add_option("--expr", expr_path, "expression file")->required();

  std::string pf_name;
  int pf_n = 1, pf_maxpart = 3;
  auto* pfe = app.add_subcommand("pfe", "verify a partial fraction identity");
  pfe->add_option("--id", pf_name, "alt_identity | a_id | pfexp1 | pfexp2 | ww_pfe")->required();
  pfe->add_option("--n", pf_n, "number of variables")->required();
  pfe->add_option("--max-part", pf_maxpart, "partition bound (alt_identity only)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // malformed input exits 2, --help exits 0
  }

  try {
    if (vclass->parsed()) return cmd_verify_class(class_params, direct);
    if (vall->parsed()) return emit_run_result(run_verify_all(cfg), out_path);
    if (vfile->parsed())
      return emit_run_result(run_instances(parse_instance_file(slurp(batch_path)), batch_jobs),
                             batch_out);
    if (gf->parsed()) {
      Poset p = parse_poset(slurp(poset_path));
      TruncSeries s = gf_truncated(p, order);
      for (int k = 0; k <= order; ++k) std::cout << (k ? " " : "") << s.coeff(k).get_str();
      std::cout << "\n";
      if (hlf) {
        GFReport rep = check_hlf(p, order, poset_path);
        std::cout << rep.line() << "\n";
        return rep.match ? 0 : 1;
      }
      return 0;
    }
    if (hooks->parsed()) {
      Poset p = parse_poset(slurp(hooks_path));
      HookMap h = hook_lengths(p);
      for (size_t i = 0; i < h.size(); ++i) std::cout << (i ? " " : "") << h[i];
      std::cout << "\n";
      return 0;
    }
    if (qint->parsed()) {
      std::cout << evaluate_qexpr(parse_qexpr(slurp(expr_path))) << "\n";
      return 0;
    }
    if (pfe->parsed()) {
      auto id = pf_id_parse(pf_name);
      if (!id) throw std::invalid_argument("unknown identity '" + pf_name + "'");
      bool ok = verify_partial_fraction(*id, pf_n, pf_maxpart);
      std::cout << "PFE " << pf_name << " n=" << pf_n << " " << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace qhook
