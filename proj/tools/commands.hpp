#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace superint {

enum ExitCode { kExitOk = 0, kExitVerifyFail = 1, kExitEngineFail = 2, kExitUsage = 64, kExitParse = 65 };

// Command line without the program name, e.g. {"verify", "op.json"}.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superint
