#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hnc::cli {

enum ExitCode { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

// args excludes the program name. Reads "-" inputs from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace hnc::cli
