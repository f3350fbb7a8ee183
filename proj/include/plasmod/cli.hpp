#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plasmod {

// Entry point behind the `plasmod` binary. args excludes the program name.
// Exit codes: 0 success, 1 runtime error, 2 usage error.
int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err);

}  // namespace plasmod
