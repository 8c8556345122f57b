#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zrl::cli {

/// Runs the zrl command line with argv[0] omitted. Reports go to `out`,
/// diagnostics and usage text to `err`.
///
/// Exit codes: 0 success, 1 domain or numerical error, 2 malformed input
/// (unknown flags, bad values, unparsable files).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace zrl::cli
