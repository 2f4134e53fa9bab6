#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ocring {

// Runs one CLI command. Returns the process exit code:
// 0 ok, 1 math-precondition / input failure, 2 precision exhaustion.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cli_main(int argc, char** argv);

} // namespace ocring
