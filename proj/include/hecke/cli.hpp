// Testable command-line driver; the binary in tools/ is a thin wrapper.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hecke::cli {

// Exit codes: 0 success, 2 parse error, 3 precondition violation,
// 4 inconclusive outcome (with --strict where applicable).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
