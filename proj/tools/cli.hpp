#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dlab::cli {

// Exit codes.
inline constexpr int kPass = 0, kFail = 1, kInconclusive = 2, kPrecondition = 3, kUsage = 64, kResource = 65,
                     kIo = 74, kInternal = 70;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlab::cli
