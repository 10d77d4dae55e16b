#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace fmetric::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int { kPass = 0, kFail = 1, kUsage = 2 };

/// One report per built-in example family, with the expected verdicts.
nlohmann::json examples_gallery();

/// Parses `args` (without the program name), runs the selected command and
/// writes the JSON report to `out` (or to --out). Errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fmetric::cli
