#pragma once

#include <string>

namespace cineparse {

enum class LogLevel { error = 0, warn = 1, info = 2, debug = 3 };

// Active level comes from the CINEPARSE_LOG environment variable
// (error|warn|info|debug, default warn); messages go to stderr.
LogLevel log_level();

bool log_enabled(LogLevel level);

void log(LogLevel level, const std::string& message);

inline void log_error(const std::string& m) { log(LogLevel::error, m); }
inline void log_warn(const std::string& m) { log(LogLevel::warn, m); }
inline void log_info(const std::string& m) { log(LogLevel::info, m); }
inline void log_debug(const std::string& m) { log(LogLevel::debug, m); }

}  // namespace cineparse
