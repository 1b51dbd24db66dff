#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace carlitz::cli {

enum ExitCode : int { kSuccess = 0, kAssertionFailure = 1, kUsage = 2 };

/// Runs one command line (without the program name). Records go to `out`;
/// diagnostics and failure witnesses go to `err` as JSON.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Asks a running scan to save its checkpoint and stop after the current
/// block. Safe to call from a signal handler.
void request_stop() noexcept;
void clear_stop() noexcept;
bool stop_requested() noexcept;

}  // namespace carlitz::cli
