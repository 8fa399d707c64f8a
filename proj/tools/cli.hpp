#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fejerlab::lab {

enum ExitCode : int { kOk = 0, kConfigError = 1, kContractViolation = 2 };

/// Runs the experiment driver on `args` (without the program name). CSV goes
/// to --out when given and to `out` otherwise; the run summary goes to `out`
/// when CSV is written to a file and to `err` otherwise.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fejerlab::lab
