#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace metacert::cli {

inline constexpr std::string_view tool_version = "0.1.0";

/// Exit codes of the command-line interface.
enum ExitCode : int { success = 0, violated = 1, input_error = 2 };

struct Terminal {
    bool color = false; ///< mark verdicts with ANSI colours in text reports
};

/// Runs one command line (without the program name). Reports go to `out`
/// unless `--out` names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, Terminal terminal = {});

} // namespace metacert::cli
