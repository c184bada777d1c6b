#pragma once

#include <string_view>

namespace metamix {

enum class LogLevel { debug = 0, info = 1, warning = 2, silent = 3 };

/// Messages below this level are dropped. Defaults to info.
void set_log_level(LogLevel level);
LogLevel log_level();

void log_info(std::string_view message);
void log_warning(std::string_view message);

}  // namespace metamix
