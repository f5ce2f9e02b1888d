#pragma once

// Verification suites: each closed form in the library is replayed against
// an independent route (counting oracle, quadrature, series expansion, or a
// second global formula) and the comparisons are collected into a
// machine-readable report.

#include "core/local_nonarch.hpp"

#include <string>
#include <vector>

namespace hc::vf {

struct verify_config {
  std::vector<long long> primes{2, 3, 5};
  int max_delta = 2;
  int max_r = 3;
  long max_s = 2;
  double precision = 1e-10; // tolerance for cross-route numeric comparisons
  bool thorough = false;    // widen the parameter grid (slower)
  unsigned threads = 0;     // 0 picks min(hardware, 8)
};

struct verify_report {
  std::string suite;
  std::vector<local::check_result> checks; // sorted by label
  std::size_t passed = 0;
  bool overall = false;
};

// {"local-oracle", "local-identities", "archimedean", "global", "all"}
const std::vector<std::string> &suite_names();

// Runs every check of the named suite (possibly in parallel); throws
// domain_error for an unknown suite name.  A check that raises is reported
// as failed with the message folded into its label.
verify_report run_suite(const std::string &suite, const verify_config &cfg = {});

std::string report_json(const verify_report &report);

} // namespace hc::vf
