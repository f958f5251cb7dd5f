#pragma once

#include <sstream>
#include <string>

namespace sincnet {

enum class LogLevel { kQuiet = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

// Global level, read once from the SINCNET_LOG environment variable
// (quiet|warn|info|debug or 0..3; default info).
LogLevel log_level();

void log_message(LogLevel level, const std::string& msg);

namespace detail {
class LogLine {
 public:
  explicit LogLine(LogLevel level) : level_(level) {}
  ~LogLine() { log_message(level_, stream_.str()); }
  template <typename T>
  LogLine& operator<<(const T& v) {
    stream_ << v;
    return *this;
  }

 private:
  LogLevel level_;
  std::ostringstream stream_;
};
}  // namespace detail

}  // namespace sincnet

#define SINCNET_WARN() ::sincnet::detail::LogLine(::sincnet::LogLevel::kWarn)
#define SINCNET_INFO() ::sincnet::detail::LogLine(::sincnet::LogLevel::kInfo)
#define SINCNET_DEBUG() ::sincnet::detail::LogLine(::sincnet::LogLevel::kDebug)
