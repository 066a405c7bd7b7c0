#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace krorb {

// Runs the command-line tool on already-split arguments (program name
// excluded). Treefile arguments name a file or "-" for `in`. Exit codes:
// 0 success, 1 verification failure, 2 parse/validation/usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace krorb
