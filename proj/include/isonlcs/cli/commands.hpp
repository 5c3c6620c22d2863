#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "isonlcs/cli/config.hpp"

namespace isonlcs::cli {

// Executes one validated command and writes its artifact plus the
// "<artifact>.config.json" sidecar. Returns the process exit status.
int run(const RunConfig& config, std::ostream& log);

// Full front end: parse, validate, run, map errors to exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& log);

}  // namespace isonlcs::cli
