#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spirale::cli {

// Runs one invocation (args exclude the program name). Returns the exit
// status: 0 on success, 1 for domain errors, 2 for usage errors. Errors go to
// `err` as a single "ERROR <code>: <message>" line.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace spirale::cli
