#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a mathematical
// check failed, 2 bad input (usage, schema, parse).

#include <iosfwd>
#include <string>
#include <vector>

namespace hopftwist {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopftwist
