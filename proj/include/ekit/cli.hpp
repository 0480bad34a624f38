#pragma once

#include <string>
#include <vector>

namespace ekit {

struct CommandResult {
  int exit_code;       ///< 0 exactly when status is "ok"
  std::string output;  ///< full response document (JSON except for --help)
};

/// Dispatch one command-line invocation; args exclude the program name.
/// Never throws: every failure becomes a JSON error envelope.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace ekit
