#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace revtri {

/// Entry point shared by the executable and the tests. args excludes the
/// program name. Reports go to out, diagnostics to err. Returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace revtri
