#include "mvmr/log.hpp"

#include <cstdlib>
#include <mutex>

#include <spdlog/sinks/stdout_sinks.h>

namespace mvmr {

namespace {

std::mutex& logger_mutex() {
  static std::mutex m;
  return m;
}

std::shared_ptr<spdlog::logger>& logger_slot() {
  static std::shared_ptr<spdlog::logger> slot = [] {
    auto sink = std::make_shared<spdlog::sinks::stderr_sink_mt>();
    auto l = std::make_shared<spdlog::logger>("mvmr", sink);
    l->set_pattern("[mvmr] %l: %v");
    l->set_level(spdlog::level::warn);
    if (const char* env = std::getenv("MVMR_LOG_LEVEL")) l->set_level(spdlog::level::from_str(env));
    return l;
  }();
  return slot;
}

}  // namespace

std::shared_ptr<spdlog::logger> logger() {
  std::lock_guard lock(logger_mutex());
  return logger_slot();
}

void set_logger(std::shared_ptr<spdlog::logger> replacement) {
  std::lock_guard lock(logger_mutex());
  logger_slot() = std::move(replacement);
}

ScopedLogLevel::ScopedLogLevel(spdlog::level::level_enum level) : saved_(logger()->level()) {
  if (level > saved_) {
    logger()->set_level(level);
  }
}

ScopedLogLevel::~ScopedLogLevel() { logger()->set_level(saved_); }

}  // namespace mvmr
