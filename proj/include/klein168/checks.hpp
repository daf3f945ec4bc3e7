#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace klein {

// Configuration for the report runner, loadable from a `key = value` text
// file with '#' comments. Keys: conductor, primes (comma separated),
// rh_gmax, selection (comma separated check ids; empty means all).
struct CheckConfig {
  long conductor = 28;
  std::vector<long> primes = {31991, 65521};
  long rh_gmax = 30;
  std::vector<std::string> selection;

  static CheckConfig from_file(const std::string& path);
};

// One ledger entry. status is "pass", "fail" or "reported"; "reported" is
// reserved for quantities with no independent expected value, where the
// payload itself is the result. Payload values are exact strings or
// integers, never floating point; seconds is wall time and is the only
// field allowed to differ between identical runs.
struct CheckResult {
  std::string id;
  std::string status;
  nlohmann::json payload;
  double seconds = 0.0;
};

struct ReportOutcome {
  std::vector<CheckResult> results;
  int exit_code = 0;  // 0 all pass, 1 at least one fail, 2 usage/input error
};

// Ids of every registered check, sorted.
std::vector<std::string> available_checks();

// Runs the selected checks (all when selection is empty), sorted by id.
// Unknown ids or missing bundled data files yield exit code 2.
ReportOutcome run_report(const CheckConfig& cfg);

// Deterministic serialization of the outcome; timing appears in a separate
// field so byte comparison of `checks` is stable across runs.
std::string report_json(const ReportOutcome& outcome);

}  // namespace klein
