#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rbalg::cli {

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` or to the --output file, diagnostics to `err`. Returns 0 on success,
/// 1 when an identity or cross-check fails, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rbalg::cli
