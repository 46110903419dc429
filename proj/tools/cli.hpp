#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "arxdp/dyadic.hpp"

namespace arxdp::cli {

enum class Format { exact, decimal, both };

enum ExitCode : int { kOk = 0, kUsage = 1, kGuard = 2, kMismatch = 3 };

/// "0", "1", or "k/4^n = reduced"; the decimal form is prefixed with '~'.
std::string render(const Dyadic& p, unsigned n, Format format);

/// Runs one command; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arxdp::cli
