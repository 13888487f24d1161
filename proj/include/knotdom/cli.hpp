#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "knotdom/knotbase.hpp"

namespace knotdom {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitError = 1, kExitObstructed = 2, kExitUnknown = 3 };

struct CheckResult {
  std::string id;
  bool pass = false;
  std::string detail;
  std::string reference;
};

/// The fixed sequence of worked-example checks run by `verify-paper`.
std::vector<CheckResult> run_example_checks(const Corpus& corpus);
nlohmann::json run_report_json(const std::vector<CheckResult>& checks);

/// Entry point of the tool. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace knotdom
