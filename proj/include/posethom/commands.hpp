#pragma once

#include "posethom/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace posethom {

struct CommandOutcome {
  int exit_code = 0;     // 0 success, 1 domain error, 2 usage error
  std::string output;    // stdout: the emitted report (or document for `generate`)
  std::string diagnostics;  // stderr
  std::optional<Report> report;
};

/// `args` excludes the program name.
CommandOutcome run_command(const std::vector<std::string>& args);

}  // namespace posethom
