#pragma once

#include <string>
#include <vector>

#include "qhook/classes.hpp"

namespace qhook {

/// Instance-sweep bounds for `verify all`; the defaults match the
/// desk-scale verification matrix.
struct SweepConfig {
  int max_part = 2;
  int kmax = 2;
  int mmax = 2;
  int nmax = 4;
  int jobs = 1;
};

/// Every instance the sweep covers, in deterministic report order.
std::vector<ClassInstance> default_sweep(const SweepConfig& cfg);

struct RunResult {
  bool all_pass = true;
  std::vector<VerifyReport> reports;  // in sweep order
  /// Report file body: one `CLASS ... PASS|FAIL` line per instance, no
  /// timing column (byte-identical across runs).
  std::string report_text() const;
};

/// Runs the sweep on cfg.jobs worker threads; reports keep the sweep order
/// regardless of scheduling.
RunResult run_verify_all(const SweepConfig& cfg);

/// Verifies an explicit instance list (e.g. parsed from a batch file) on
/// `jobs` workers, keeping input order.
RunResult run_instances(const std::vector<ClassInstance>& instances, int jobs);

/// Parses a batch file: one instance per line, blank lines and `#` comments
/// allowed.
std::vector<ClassInstance> parse_instance_file(const std::string& text);

/// The command-line front end; argv-style arguments without the program
/// name. Returns the process exit code (0 pass, 1 any FAIL, 2 bad input).
int run_cli(const std::vector<std::string>& args);

}  // namespace qhook
