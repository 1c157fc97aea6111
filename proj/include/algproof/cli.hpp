#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace algproof::cli {

// Runs one command. args excludes the program name. Exit codes: 0 success,
// 1 well-formed but invalid proof or failed audit, 2 parse, I/O or flag
// error. Errors are written to err as {"error":{"code","message"}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace algproof::cli
