#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcover {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line (args excludes the program name). The default output
// format comes from $QCOVER_FORMAT (text|json) unless --json/--format is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcover
