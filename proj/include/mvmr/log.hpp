#pragma once

#include <memory>

#include <spdlog/logger.h>

namespace mvmr {

// Library-wide logger ("mvmr"), stderr by default.
std::shared_ptr<spdlog::logger> logger();
void set_logger(std::shared_ptr<spdlog::logger> replacement);

// Raises the logger level for the lifetime of the guard; used to keep
// Monte Carlo loops from emitting one warning per replication.
class ScopedLogLevel {
 public:
  explicit ScopedLogLevel(spdlog::level::level_enum level);
  ~ScopedLogLevel();
  ScopedLogLevel(const ScopedLogLevel&) = delete;
  ScopedLogLevel& operator=(const ScopedLogLevel&) = delete;

 private:
  spdlog::level::level_enum saved_;
};

}  // namespace mvmr
