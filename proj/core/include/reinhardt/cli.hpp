#pragma once
// Command line surface. The entry point is a library function so tests can
// drive subcommands and capture their streams directly.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace reinhardt::cli {

// Exit code 0 on success, 1 on runtime errors, 2 on usage errors.
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Expands run-length groups: "[(3,1,1)^3]" -> "[3,1,1,3,1,1,3,1,1]".
// Plain bracket text passes through unchanged.
std::string expand_run_length_notation(std::string_view text);

}  // namespace reinhardt::cli
