#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lsf::cli {

// Exit codes: the mathematical answer is yes / no, or the request failed.
inline constexpr int kYes = 0;
inline constexpr int kError = 1;
inline constexpr int kNo = 2;

/// Runs one command line (without the program name) and writes its document
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lsf::cli
