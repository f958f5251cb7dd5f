#include "sincnet/logging.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>

namespace sincnet {

static LogLevel parse_level(const char* s) {
  if (s == nullptr || *s == '\0') return LogLevel::kInfo;
  if (std::strcmp(s, "quiet") == 0 || std::strcmp(s, "0") == 0) return LogLevel::kQuiet;
  if (std::strcmp(s, "warn") == 0 || std::strcmp(s, "1") == 0) return LogLevel::kWarn;
  if (std::strcmp(s, "info") == 0 || std::strcmp(s, "2") == 0) return LogLevel::kInfo;
  if (std::strcmp(s, "debug") == 0 || std::strcmp(s, "3") == 0) return LogLevel::kDebug;
  return LogLevel::kInfo;
}

LogLevel log_level() {
  static LogLevel level = parse_level(std::getenv("SINCNET_LOG"));
  return level;
}

void log_message(LogLevel level, const std::string& msg) {
  if (static_cast<int>(level) > static_cast<int>(log_level())) return;
  const char* tag = level == LogLevel::kWarn ? "WARN" : level == LogLevel::kDebug ? "DEBUG" : "INFO";
  std::fprintf(stderr, "[sincnet %s] %s\n", tag, msg.c_str());
}

}  // namespace sincnet
