#pragma once

#include <string>

namespace saci {

enum class LogLevel { quiet = 0, warn = 1, info = 2, debug = 3 };

/// Verbosity is controlled by the SACI_LOG environment variable
/// (quiet|warn|info|debug, default warn). Messages go to stderr.
LogLevel log_level();

void log_warn(const std::string& message);
void log_info(const std::string& message);
void log_debug(const std::string& message);

}  // namespace saci
